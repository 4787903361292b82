"""Command-line front end.

Enumeration, the forward and inverse maps, an exhaustive verification
battery, golden-case replay, and graph export.  Partitions are passed
as comma-separated parts (``--lambda 3,2``), subsets as comma-separated
chain positions (``--subset 1,2,3,5``), and fillings in the bar-and-comma
column form (``--filling 2,3|1,2|1``).  Any guard violation, parse
failure, or verification mismatch produces a one-line ``error: reason``
on stderr and a non-zero exit.
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

import click

from .alcove import (
    chain_to_text,
    enumerate_admissible,
    fold,
    is_admissible,
    lambda_chain,
    omega_chain,
    subset_to_json,
)
from .columns import (
    Filling,
    enumerate_tensor,
    extend,
    filling_to_json,
    format_column,
    format_filling,
    parse_column,
    parse_filling,
    split,
    validate_kn,
)
from .fill import fill, fill_result_to_json
from .inverse import NoPathError, invert, is_blocked_off, path, reorder, sweep
from .qbg import build_qbg, edge_kind, export_dot
from .weyl import LieType, apply_reflection, identity_window, parse_root

__all__ = ["main"]


def _parse_lambda(text):
    """Read a comma-separated partition.

    >>> _parse_lambda("3,2")
    (3, 2)
    >>> _parse_lambda("")
    ()
    """
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"lambda must be comma-separated integers, got {text!r}")


def _parse_subset(text):
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"subset must be comma-separated positions, got {text!r}")


def _type_options(command):
    command = click.option(
        "--rank", type=int, required=True, help="Window length n."
    )(command)
    command = click.option(
        "--type",
        "family",
        type=click.Choice(["A", "B", "C", "D"]),
        required=True,
        help="Root system family.",
    )(command)
    return command


def _shape_options(command):
    command = click.option(
        "--lambda",
        "lam",
        required=True,
        help="Partition as comma-separated parts, for example 3,2.",
    )(command)
    return _type_options(command)


def _format_option(command):
    return click.option(
        "--format",
        "form",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
        help="Human-readable lines or JSON lines.",
    )(command)


def _output_option(command):
    return click.option(
        "--output",
        type=click.File("w"),
        default="-",
        help="Destination file, - for stdout.",
    )(command)


class _CliError(click.ClickException):
    exit_code = 2

    def show(self, file=None):
        click.echo(f"error: {self.message}", err=True)


def _guarded(action):
    try:
        return action()
    except (ValueError, NoPathError) as exc:
        raise _CliError(str(exc))


@click.group()
def main():
    """Quantum alcove model and Kashiwara-Nakashima column tools."""


@main.command("enumerate-admissible")
@_shape_options
@_format_option
@_output_option
def enumerate_admissible_command(family, rank, lam, form, output):
    """List every admissible subset of the lambda-chain."""

    def action():
        lt = LieType(family, rank)
        chain = lambda_chain(lt, _parse_lambda(lam))
        return chain, enumerate_admissible(chain)

    chain, subsets = _guarded(action)
    for fs in subsets:
        if form == "json":
            output.write(json.dumps(subset_to_json(fs), sort_keys=True) + "\n")
        else:
            output.write("J=" + ",".join(str(j) for j in fs.J) + "\n")


@main.command("enumerate-tensor")
@_shape_options
@_format_option
@_output_option
def enumerate_tensor_command(family, rank, lam, form, output):
    """List every element of the tensor product of column crystals."""

    def action():
        lt = LieType(family, rank)
        return enumerate_tensor(lt, _parse_lambda(lam))

    elements = _guarded(action)
    for element in elements:
        if form == "json":
            output.write(json.dumps(filling_to_json(element), sort_keys=True) + "\n")
        else:
            output.write(format_filling(element) + "\n")


@main.command("fill")
@_shape_options
@_format_option
@_output_option
@click.option("--subset", required=True, help="Admissible subset, for example 1,2,3,5.")
def fill_command(family, rank, lam, subset, form, output):
    """Map an admissible subset to its raw and sorted fillings."""

    def action():
        lt = LieType(family, rank)
        shape = _parse_lambda(lam)
        chain = lambda_chain(lt, shape)
        J = _parse_subset(subset)
        if not is_admissible(fold(chain, J)):
            raise ValueError(f"subset {J} is not admissible for this chain")
        return fill(lt, shape, J, chain)

    result = _guarded(action)
    if form == "json":
        output.write(json.dumps(fill_result_to_json(result), sort_keys=True) + "\n")
    else:
        output.write("raw=" + format_filling(result.raw) + "\n")
        output.write("sorted=" + format_filling(result.sorted) + "\n")


@main.command("invert")
@_shape_options
@_format_option
@_output_option
@click.option("--filling", required=True, help="Sorted filling, for example 2,3|1,2|1.")
@click.option("--trace", is_flag=True, help="Emit one JSON line per path step first.")
def invert_command(family, rank, lam, filling, trace, form, output):
    """Recover the admissible subset behind a tensor element."""

    def action():
        lt = LieType(family, rank)
        shape = _parse_lambda(lam)
        element = parse_filling(lt, shape, filling)
        return invert(lt, element, collect_trace=trace)

    result = _guarded(action)
    if trace:
        for row in result.rows:
            for step in row.steps:
                output.write(
                    json.dumps(
                        {
                            "index": step.index,
                            "root": str(step.root),
                            "stage": step.stage,
                            "window": list(step.window),
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
    if form == "json":
        output.write(json.dumps(subset_to_json(result.subset), sort_keys=True) + "\n")
    else:
        output.write("J=" + ",".join(str(j) for j in result.subset.J) + "\n")


@main.command("qbg-dot")
@_type_options
@_output_option
def qbg_dot_command(family, rank, output):
    """Print the quantum Bruhat graph in DOT form."""
    graph = _guarded(lambda: build_qbg(LieType(family, rank)))
    output.write(export_dot(graph) + "\n")


# ---------------------------------------------------------------------------
# verify

def _subset_mismatch(lt, lam, chain, J, tensor_keys):
    image = fill(lt, lam, J, chain).sorted
    if image.columns not in tensor_keys:
        return f"subset {J}: image {format_filling(image)} is not a tensor element"
    try:
        back = invert(lt, image, collect_trace=False).subset.J
    except NoPathError as exc:
        return f"subset {J}: inverse failed: {exc}"
    if back != J:
        return f"subset {J}: roundtrip returned {back}"
    return None


def _tensor_mismatch(lt, lam, chain, columns, admissible_keys):
    element = Filling(lt, lam, columns)
    shown = format_filling(element)
    try:
        result = invert(lt, element, collect_trace=False)
    except NoPathError as exc:
        return f"tensor {shown}: inverse failed: {exc}"
    J = result.subset.J
    if J not in admissible_keys:
        return f"tensor {shown}: subset {J} is not admissible"
    window = identity_window(lt.rank)
    for root in result.subset.T:
        if edge_kind(lt, window, root) is None:
            return f"tensor {shown}: illegal edge {root} from {window}"
        window = apply_reflection(window, root)
    image = fill(lt, lam, J, chain).sorted
    if image.columns != columns:
        return f"tensor {shown}: refill produced {format_filling(image)}"
    return None


def _verify_chunk(args):
    family, rank, lam, start, items, admissible_keys, tensor_keys = args
    lt = LieType(family, rank)
    chain = lambda_chain(lt, lam)
    found = []
    for offset, (side, payload) in enumerate(items):
        if side == "subset":
            message = _subset_mismatch(lt, lam, chain, payload, tensor_keys)
        else:
            message = _tensor_mismatch(lt, lam, chain, payload, admissible_keys)
        if message is not None:
            found.append((start + offset, message))
    return found


def _worker_count():
    raw = os.environ.get("KRALCOVE_WORKERS", "1")
    try:
        count = int(raw)
    except ValueError:
        count = 0
    if count < 1:
        raise ValueError(f"KRALCOVE_WORKERS must be a positive integer, got {raw!r}")
    return count


def _verify_battery(family, rank, lam):
    lt = LieType(family, rank)
    chain = lambda_chain(lt, lam)
    subsets = [fs.J for fs in enumerate_admissible(chain)]
    tensor = [element.columns for element in enumerate_tensor(lt, lam)]
    counts = {"admissible": len(subsets), "tensor": len(tensor)}
    mismatches = []
    if len(subsets) != len(tensor):
        mismatches.append(
            f"counts differ: {len(subsets)} admissible vs {len(tensor)} tensor"
        )
    admissible_keys = frozenset(subsets)
    tensor_keys = frozenset(tensor)
    tasks = [("subset", J) for J in subsets] + [("tensor", cols) for cols in tensor]
    workers = _worker_count()
    if workers == 1 or len(tasks) < 2 * workers:
        found = _verify_chunk((family, rank, lam, 0, tasks, admissible_keys, tensor_keys))
    else:
        size = -(-len(tasks) // workers)
        chunks = [
            (family, rank, lam, start, tasks[start : start + size],
             admissible_keys, tensor_keys)
            for start in range(0, len(tasks), size)
        ]
        found = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_verify_chunk, chunks):
                found.extend(part)
    mismatches.extend(message for _, message in sorted(found))
    return {
        "type": family,
        "rank": rank,
        "lambda": list(lam),
        "counts": counts,
        "mismatches": mismatches,
    }


@main.command("verify")
@_shape_options
@_output_option
def verify_command(family, rank, lam, output):
    """Check the two-sided bijection exhaustively for one shape.

    Every admissible subset must fill to a tensor element and invert
    back to itself; every tensor element must invert to an admissible
    subset whose path is edge-by-edge legal and refill to itself.  The
    summary is one JSON object; the exit status is zero exactly when
    the mismatch list is empty.  KRALCOVE_WORKERS shards the battery.
    """
    summary = _guarded(lambda: _verify_battery(family, rank, _parse_lambda(lam)))
    output.write(json.dumps(summary, sort_keys=True) + "\n")
    if summary["mismatches"]:
        raise _CliError(f"{len(summary['mismatches'])} mismatches")


# ---------------------------------------------------------------------------
# golden replay

def _replay_walk(case):
    lt = LieType(case["type"], case["rank"])
    lam = tuple(case["lambda"])
    chain = lambda_chain(lt, lam)
    J = tuple(case["subset"])
    fs = fold(chain, J)
    windows = [identity_window(lt.rank)]
    edges = []
    for root in fs.T:
        kind = edge_kind(lt, windows[-1], root)
        edges.append(kind)
        windows.append(apply_reflection(windows[-1], root))
    result = fill(lt, lam, J, chain)
    return {
        "chain": chain_to_text(chain).splitlines(),
        "admissible": is_admissible(fs),
        "windows": [list(w) for w in windows],
        "edges": edges,
        "raw": format_filling(result.raw),
        "sorted": format_filling(result.sorted),
    }


def _replay_reorder(case):
    lt = LieType(case["type"], case["rank"])
    element = parse_filling(lt, tuple(case["lambda"]), case["filling"])
    return {"reordered": format_filling(reorder(lt, element))}


def _replay_path(case):
    lt = LieType(case["type"], case["rank"])
    element = parse_filling(lt, tuple(case["lambda"]), case["filling"])
    result = path(lt, reorder(lt, element))
    return {
        "J": list(result.subset.J),
        "roots": [str(root) for root in result.subset.T],
        "windows": [list(s.window) for row in result.rows for s in row.steps],
    }


def _replay_column_validity(case):
    lt = LieType(case["type"], case["rank"])
    return {"valid": validate_kn(lt, parse_column(case["column"]))}


def _replay_split_extend(case):
    lt = LieType(case["type"], case["rank"])
    pair = split(lt, parse_column(case["column"]))
    extended = extend(lt, pair, case["height"])
    return {
        "left": format_column(pair.left),
        "right": format_column(pair.right),
        "extended_left": format_column(extended.left),
        "extended_right": format_column(extended.right),
    }


def _replay_blocked_off(case):
    lt = LieType(case["type"], case["rank"])
    report = is_blocked_off(
        lt, parse_column(case["left"]), parse_column(case["right"]), case["row"]
    )
    return {"blocked": bool(report), "position": report.position, "bound": report.bound}


def _replay_segment_sweep(case):
    lt = LieType(case["type"], case["rank"])
    positions = [p for p in omega_chain(lt, case["height"]) if p.side == "left"]
    end, traces = sweep(lt, tuple(case["start"]), tuple(case["target"]), positions, 1)
    return {
        "end": list(end),
        "rows": [
            {
                "row": trace.row,
                "roots": [str(s.root) for s in trace.steps],
                "stages": [s.stage for s in trace.steps],
                "windows": [list(s.window) for s in trace.steps],
                "skips": [
                    {"root": str(s.root), "stage": s.stage, "window": list(s.window)}
                    for s in trace.skips
                ],
            }
            for trace in traces
        ],
    }


def _replay_qbg_path(case):
    lt = LieType(case["type"], case["rank"])
    window = tuple(case["start"])
    windows = [list(window)]
    kinds = []
    for text in case["roots"]:
        root = parse_root(text)
        kinds.append(edge_kind(lt, window, root))
        window = apply_reflection(window, root)
        windows.append(list(window))
    return {"windows": windows, "kinds": kinds}


_REPLAYS = {
    "walk": _replay_walk,
    "reorder": _replay_reorder,
    "path": _replay_path,
    "column-validity": _replay_column_validity,
    "split-extend": _replay_split_extend,
    "blocked-off": _replay_blocked_off,
    "segment-sweep": _replay_segment_sweep,
    "qbg-path": _replay_qbg_path,
}


def _canonical(value):
    return json.dumps(value, sort_keys=True, separators=(",", ":")).encode()


def golden_cases():
    """Yield (name, case) for every packaged golden file, sorted by name."""
    base = resources.files(__package__) / "golden"
    for entry in sorted(base.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            yield entry.name[: -len(".json")], json.loads(entry.read_text())


def replay_case(case):
    """Recompute the expectation block of one golden case."""
    kind = case["kind"]
    if kind not in _REPLAYS:
        raise ValueError(f"unknown golden kind {kind!r}")
    return _REPLAYS[kind](case)


@main.command("examples")
@_output_option
def examples_command(output):
    """Replay every packaged golden case and compare byte-exactly."""
    failures = 0
    for name, case in golden_cases():
        got = _guarded(lambda: replay_case(case))
        if _canonical(got) == _canonical(case["expect"]):
            output.write(f"ok {name}\n")
        else:
            output.write(f"FAIL {name}\n")
            failures += 1
    if failures:
        raise _CliError(f"{failures} golden cases failed")


if __name__ == "__main__":
    main()
