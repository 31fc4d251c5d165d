"""Constructors for the named graph families.

Vertex labels are fixed so results are reproducible:

* ``theta(p, q, l)``: the two branch vertices are 0 and 1; then the interior
  vertices of the length-p path, the length-q path and the length-l path,
  each listed from the 0 end.
* ``dumbbell(p, q)``: first cycle 0..p-1; second cycle through 0 on
  p..p+q-2.
* ``barbell(p, q, l)``: first cycle 0..p-1; bridge path from 0 through
  p..p+l-1, whose last vertex starts the second cycle p+l-1..p+l+q-2.
* ``spider(p, q, l)``: centre 0, then the legs of length p, q, l in that
  order, each listed outward.
* ``tadpole(p, q)``: cycle 0..p-1, pendant path from 0 through p..p+q-1.
* ``path(n)``, ``cycle(n)``, ``complete(n)`` on n vertices; ``star(k)`` is
  K_{1,k} with centre 0.
"""
from __future__ import annotations

from .errors import BadParams
from .graph import Graph, build_graph


def _path_from(start, first_new, length):
    """Edges of a path of ``length`` edges leaving ``start``; returns (edges, end)."""
    edges = []
    prev = start
    for i in range(length):
        edges.append((prev, first_new + i))
        prev = first_new + i
    return edges, prev


def _cycle_edges(vertices):
    k = len(vertices)
    return [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def _need(cond, msg):
    if not cond:
        raise BadParams(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(n, _cycle_edges(list(range(n))))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(k: int) -> Graph:
    _need(k >= 1, "star needs k >= 1 leaves")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def theta(p: int, q: int, l: int) -> Graph:
    _need(p >= 2 and q >= 2 and l >= 1, "theta needs p, q >= 2 and l >= 1")
    edges = []
    nxt = 2
    for length in (p, q, l):
        if length == 1:
            edges.append((0, 1))
            continue
        seg, end = _path_from(0, nxt, length - 1)
        edges += seg + [(end, 1)]
        nxt += length - 1
    return build_graph(nxt, edges)


def dumbbell(p: int, q: int) -> Graph:
    _need(p >= 3 and q >= 3, "dumbbell needs p, q >= 3")
    n = p + q - 1
    edges = _cycle_edges(list(range(p))) + _cycle_edges([0] + list(range(p, n)))
    return build_graph(n, edges)


def barbell(p: int, q: int, l: int) -> Graph:
    _need(p >= 3 and q >= 3 and l >= 1, "barbell needs p, q >= 3 and l >= 1")
    n = p + q + l - 1
    bridge, end = _path_from(0, p, l)
    edges = _cycle_edges(list(range(p))) + bridge + _cycle_edges([end] + list(range(end + 1, n)))
    return build_graph(n, edges)


def spider(p: int, q: int, l: int) -> Graph:
    _need(p >= 1 and q >= 1 and l >= 1, "spider needs p, q, l >= 1")
    edges = []
    nxt = 1
    for length in (p, q, l):
        seg, _ = _path_from(0, nxt, length)
        edges += seg
        nxt += length
    return build_graph(nxt, edges)


def tadpole(p: int, q: int) -> Graph:
    _need(p >= 3 and q >= 1, "tadpole needs p >= 3 and q >= 1")
    seg, _ = _path_from(0, p, q)
    return build_graph(p + q, _cycle_edges(list(range(p))) + seg)


FAMILIES = {
    "theta": (theta, 3),
    "dumbbell": (dumbbell, 2),
    "barbell": (barbell, 3),
    "spider": (spider, 3),
    "tadpole": (tadpole, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
}


def family(kind: str, params) -> Graph:
    """Build a named family member, e.g. ``family("theta", (2, 2, 3))``."""
    key = kind.lower()
    if key not in FAMILIES:
        raise BadParams(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}")
    fn, arity = FAMILIES[key]
    params = tuple(int(x) for x in params)
    if len(params) != arity:
        raise BadParams(f"{key} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_family(spec: str) -> Graph:
    """Parse ``"kind:a,b,c"`` (as used on the command line)."""
    kind, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",") if x.strip()]
    except ValueError as exc:
        raise BadParams(f"bad family parameters in {spec!r}") from exc
    return family(kind, params)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
