"""Reading and writing category files.

A category file is one JSON document::

    {
      "format": "ghostct.category/1",
      "name": "...",
      "objects": [{"id": 0, "name": "2"}, ...],
      "hom_dims": [[src, tgt, dim], ...],
      "comp": [[g_id, f_id, "c_0", "c_1", ...], ...],
      "idents": [["c_0", ...], ...],
      "shift": {"perm": [...], "transport": [[src, tgt, "m_00", "m_01", ...], ...]},
      "serre": [...] or null
    }

Basis morphisms are numbered globally by running through the triples
``(src, tgt, index)`` in lexicographic order.  A ``comp`` entry lists the
coordinates of ``g o f`` in the basis of ``Hom(src f, tgt g)``; products not
listed are zero.  Transport matrices are row major and map Hom(x, y) to
Hom(x[1], y[1]).  Scalars are strings ``"p"`` or ``"p/q"``.
"""

from __future__ import annotations

import json
from itertools import product
from pathlib import Path

from ..exactlin import Matrix, format_scalar, parse_scalar, zero_vector
from ..homcat import make_table
from ..tricat import TriangCategory, validate_triang

FORMAT = "ghostct.category/1"


class CategoryFileError(ValueError):
    pass


def _basis_ids(hom) -> dict:
    ids, k = {}, 0
    n = len(hom)
    for x, y in product(range(n), repeat=2):
        for i in range(hom[x][y]):
            ids[(x, y, i)] = k
            k += 1
    return ids


def to_document(t: TriangCategory) -> dict:
    c = t.base
    hom = c.hom
    ids = _basis_ids(hom)
    comp = []
    for (x, y, z), table in sorted(c.comp.items()):
        for gi, row in enumerate(table):
            for fi, v in enumerate(row):
                if any(v):
                    comp.append([ids[(y, z, gi)], ids[(x, y, fi)]] + [format_scalar(q) for q in v])
    transport = [
        [x, y] + [format_scalar(q) for q in m.flat()] for (x, y), m in sorted(t.transport.items())
    ]
    return {
        "format": FORMAT,
        "name": t.name,
        "objects": [{"id": k, "name": name} for k, name in enumerate(c.names)],
        "hom_dims": [[x, y, hom[x][y]] for x, y in product(range(c.size), repeat=2) if hom[x][y]],
        "comp": comp,
        "idents": [[format_scalar(q) for q in v] for v in c.idents],
        "shift": {"perm": list(t.shift), "transport": transport},
        "serre": list(t.serre) if t.serre is not None else None,
    }


def dumps(t: TriangCategory) -> str:
    return json.dumps(to_document(t), indent=1, sort_keys=True) + "\n"


def save(t: TriangCategory, path) -> None:
    problems = validate_triang(t)
    if problems:
        raise CategoryFileError("refusing to save an invalid category: " + "; ".join(problems))
    Path(path).write_text(dumps(t), encoding="utf-8")


def _scalars(items, where: str) -> tuple:
    try:
        return tuple(parse_scalar(s) for s in items)
    except (ValueError, AttributeError, TypeError) as exc:
        raise CategoryFileError(f"{where}: {exc}") from None


def from_document(doc: dict, check: bool = True) -> TriangCategory:
    try:
        if doc.get("format") != FORMAT:
            raise CategoryFileError(f"unsupported format tag {doc.get('format')!r}")
        objects = sorted(doc["objects"], key=lambda o: o["id"])
        if [o["id"] for o in objects] != list(range(len(objects))):
            raise CategoryFileError("object ids must be 0..n-1")
        names = [o["name"] for o in objects]
        n = len(names)
        hom = [[0] * n for _ in range(n)]
        for x, y, d in doc["hom_dims"]:
            hom[x][y] = d
        ids = _basis_ids(hom)
        lookup = {k: key for key, k in ids.items()}
        blocks = {}
        for x, y, z in product(range(n), repeat=3):
            if hom[x][y] and hom[y][z] and hom[x][z]:
                blocks[(x, y, z)] = [[zero_vector(hom[x][z]) for _ in range(hom[x][y])] for _ in range(hom[y][z])]
        for entry in doc["comp"]:
            g_id, f_id, *coeffs = entry
            if g_id not in lookup or f_id not in lookup:
                raise CategoryFileError(f"comp entry {entry[:2]} names an unknown basis morphism")
            y, z, gi = lookup[g_id]
            x, y2, fi = lookup[f_id]
            if y != y2:
                raise CategoryFileError(f"comp entry {entry[:2]} is not composable")
            vec = _scalars(coeffs, f"comp entry {entry[:2]}")
            if len(vec) != hom[x][z]:
                raise CategoryFileError(f"comp entry {entry[:2]} has {len(vec)} coefficients, expected {hom[x][z]}")
            if (x, y, z) not in blocks:
                if any(vec):
                    raise CategoryFileError(f"comp entry {entry[:2]} lands in a zero Hom space")
                continue
            blocks[(x, y, z)][gi][fi] = vec
        comp = {k: tuple(tuple(row) for row in v) for k, v in blocks.items()}
        idents = [_scalars(v, f"identity of {names[k]}") for k, v in enumerate(doc["idents"])]
        base = make_table(names, hom, comp, idents)
        shift = tuple(doc["shift"]["perm"])
        transport = {}
        for entry in doc["shift"]["transport"]:
            x, y, *flat = entry
            vals = _scalars(flat, f"transport ({x}, {y})")
            rows = hom[shift[x]][shift[y]] if 0 <= x < n and 0 <= y < n and len(shift) == n else 0
            cols = hom[x][y] if 0 <= x < n and 0 <= y < n else 0
            if rows * cols != len(vals):
                raise CategoryFileError(f"transport ({x}, {y}) has the wrong number of entries")
            transport[(x, y)] = Matrix.from_flat(vals, rows, cols)
        serre = doc.get("serre")
        t = TriangCategory(base, shift, transport, tuple(serre) if serre is not None else None, doc.get("name", ""))
    except CategoryFileError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise CategoryFileError(f"malformed category document: {exc!r}") from None
    if check:
        problems = validate_triang(t)
        if problems:
            raise CategoryFileError("invalid category: " + "; ".join(problems))
    return t


def loads(text: str, check: bool = True) -> TriangCategory:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise CategoryFileError(f"parse error at byte offset {offset}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise CategoryFileError("parse error at byte offset 0: top level is not an object")
    return from_document(doc, check)


def load(path, check: bool = True) -> TriangCategory:
    try:
        text = Path(path).read_bytes().decode("utf-8")
    except OSError as exc:
        raise CategoryFileError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise CategoryFileError(f"parse error at byte offset {exc.start}: not UTF-8") from None
    return loads(text, check)
