from .dp import DpSolution, NodeKind


def dump_dp_trace(solutions: list[DpSolution]) -> list[dict]:
    """
    Per-task J^S / J^F values of solved SAPs as JSON-ready rows.

    Rows are ordered by SAP, then task, S before F. `next_task`/`next_kind`
    are None at chain ends; `start` is the optimal AP start for S rows and
    the arrival time for F rows.
    """
    rows = []
    for solution in solutions:
        for task in solution.sap.tasks():
            for kind in (NodeKind.STARTING, NodeKind.FOLLOWING):
                node = solution.nodes.get((task, kind))
                if node is None:
                    continue
                rows.append(
                    {
                        "sap_first": solution.sap.first,
                        "sap_last": solution.sap.last,
                        "task": node.task,
                        "kind": node.kind.value,
                        "value": node.value,
                        "start": node.anchor,
                        "next_task": node.next.task if node.next else None,
                        "next_kind": node.next.kind.value if node.next else None,
                    }
                )
    return rows
