"""Line-oriented operation scripts for driving the reference oracles.

Grammar (one op per line, '#' starts a comment, integers 0-based):

    on V | off V            vertex toggles        (subgraph connectivity)
    conn S T                connectivity query
    ins A B [W] | del A B   edge updates          (W in {0,1}, default 1)
    dist S T                pairwise hop distance
    sdist V                 single-source distance (decremental oracle)
    tri | tri S             triangle query, global or through S
    color V C               recolor a vertex
    cdist S C               distance to nearest C-colored vertex
    fail V1 [V2 ...]        one d-failure batch
    reach U V               directed reachability
    msize                   maximum-matching size
    diam                    diameter
    density                 densest-subgraph density
    isect I J               insert intersection of sets I and J
    member I X              set membership
    set I X                 array assignment
    zprefix                 zero-prefix-sum query
    incrow I | inccol J     row/column increment
    max                     matrix maximum
"""

from __future__ import annotations

from typing import Any

_UPDATES = {
    "on": ("turn_on", 1),
    "off": ("turn_off", 1),
    "ins": ("insert_edge", -1),
    "del": ("delete_edge", 2),
    "color": ("set_color", 2),
    "set": ("set", 2),
    "isect": ("insert_intersection", 2),
    "incrow": ("inc_row", 1),
    "inccol": ("inc_col", 1),
    "fail": ("fail_batch", -1),
}

_QUERIES = {
    "conn": ("connected", 2),
    "dist": ("dist", 2),
    "sdist": ("dist", 1),
    "reach": ("reachable", 2),
    "cdist": ("dist_to_color", 2),
    "msize": ("matching_size", 0),
    "diam": ("diameter", 0),
    "density": ("density", 0),
    "member": ("member", 2),
    "zprefix": ("has_zero_prefix", 0),
    "max": ("max", 0),
}


def parse_script(text: str) -> list[tuple[str, list[int]]]:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        name, args = parts[0], parts[1:]
        if name == "tri":
            if len(args) > 1:
                raise ValueError(f"line {lineno}: tri takes at most one argument")
        elif name in _UPDATES:
            _, arity = _UPDATES[name]
            if arity >= 0 and len(args) != arity:
                raise ValueError(f"line {lineno}: {name} takes {arity} arguments")
        elif name in _QUERIES:
            _, arity = _QUERIES[name]
            if len(args) != arity:
                raise ValueError(f"line {lineno}: {name} takes {arity} arguments")
        else:
            raise ValueError(f"line {lineno}: unknown op {name!r}")
        ops.append((name, [int(a) for a in args]))
    return ops


def format_script(ops: list[tuple[str, list[int]]]) -> str:
    return "\n".join(" ".join([name] + [str(a) for a in args]) for name, args in ops) + "\n"


def run_script(oracle: Any, ops: list[tuple[str, list[int]]]) -> list[tuple[int, Any]]:
    """Applies ops in order; returns (op index, answer) for each query."""
    answers = []
    for idx, (name, args) in enumerate(ops):
        if name == "tri":
            ans = oracle.has_triangle_at(args[0]) if args else oracle.has_triangle()
            answers.append((idx, ans))
        elif name == "fail":
            oracle.fail_batch(args)
        elif name in _UPDATES:
            getattr(oracle, _UPDATES[name][0])(*args)
        else:
            answers.append((idx, getattr(oracle, _QUERIES[name][0])(*args)))
    return answers
