"""Line-based sparse algebra files.

::

    # comments and blank lines are ignored
    name example-5.6
    field Q            (or: field GF 5)
    basis a b x
    a a b 1            [a, a] += 1 b
    a x a 1/2
    annotation levi.S 1 0 0 ; 0 1 0

Entries name basis vectors by label (or by 0-based index when the token is
not a label).  Several algebras may share one file, separated by ``---``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import LeibnizAlgebra
from .field import FieldError, FieldSpec, GF, QQ
from .subspace import Subspace


class FileFormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


@dataclass
class AlgebraFile:
    field: FieldSpec
    labels: list[str]
    entries: list[tuple[int, int, int, str]]
    annotations: dict[str, list[list[str]]] = dc_field(default_factory=dict)
    name: str | None = None

    @property
    def dim(self) -> int:
        return len(self.labels)

    def to_algebra(self, *, verify: bool = True) -> LeibnizAlgebra:
        """Build the algebra; raises NotLeibnizError unless ``verify`` is off."""
        return LeibnizAlgebra.from_products(self.field, self.labels, self.entries, verify=verify, name=self.name)

    def subspace(self, key: str, L: LeibnizAlgebra) -> Subspace:
        return L.span([[L.field.parse(x) for x in vec] for vec in self.annotations[key]])


def parse_field(tokens: list[str]) -> FieldSpec:
    """``Q`` | ``GF p`` | ``GF(p)`` | ``GFp``."""
    text = "".join(tokens).replace("(", "").replace(")", "")
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("GF") and text[2:].isdigit():
        return GF(int(text[2:]))
    raise FieldError(f"unknown field {' '.join(tokens)!r}")


def _parse_one(lines: list[tuple[int, str]]) -> AlgebraFile:
    F = None
    labels = None
    dim = None
    name = None
    entries = []
    notes: dict[str, list[list[str]]] = {}
    for no, raw in lines:
        tok = raw.split()
        head = tok[0]
        try:
            if head == "field":
                F = parse_field(tok[1:])
            elif head == "name":
                name = " ".join(tok[1:])
            elif head == "dim":
                dim = int(tok[1])
            elif head == "basis":
                labels = tok[1:]
                if len(set(labels)) != len(labels):
                    raise FileFormatError("duplicate basis label", no)
            elif head == "annotation":
                if len(tok) < 2:
                    raise FileFormatError("annotation needs a key", no)
                body = " ".join(tok[2:])
                vecs = [v.split() for v in body.split(";") if v.strip()]
                for v in vecs:
                    for x in v:
                        (F or QQ).parse(x)
                notes[tok[1]] = vecs
            else:
                if labels is None and dim is not None:
                    labels = [f"e{i + 1}" for i in range(dim)]
                if F is None or labels is None:
                    raise FileFormatError("products must follow the field and basis lines", no)
                if len(tok) != 4:
                    raise FileFormatError("product lines are 'i j k scalar'", no)
                idx = []
                for t in tok[:3]:
                    if t in labels:
                        idx.append(labels.index(t))
                    elif t.isdigit() and int(t) < len(labels):
                        idx.append(int(t))
                    else:
                        raise FileFormatError(f"unknown basis element {t!r}", no)
                F.parse(tok[3])
                entries.append((*idx, tok[3]))
        except FieldError as exc:
            raise FileFormatError(str(exc), no) from None
        except (ValueError, IndexError) as exc:
            if isinstance(exc, FileFormatError):
                raise
            raise FileFormatError(str(exc), no) from None
    if F is None:
        raise FileFormatError("missing field line")
    if labels is None:
        if dim is None:
            raise FileFormatError("missing basis line")
        labels = [f"e{i + 1}" for i in range(dim)]
    if dim is not None and dim != len(labels):
        raise FileFormatError("dim does not match the basis")
    for key, vecs in notes.items():
        if any(len(v) != len(labels) for v in vecs):
            raise FileFormatError(f"annotation {key!r} has vectors of the wrong length")
    return AlgebraFile(F, labels, entries, notes, name)


def parse_text(text: str) -> list[AlgebraFile]:
    docs: list[list[tuple[int, str]]] = [[]]
    for no, line in enumerate(text.splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if s == "---":
            docs.append([])
        elif s:
            docs[-1].append((no, s))
    return [_parse_one(d) for d in docs if d]


def load(path: str) -> list[AlgebraFile]:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def load_one(path: str) -> AlgebraFile:
    docs = load(path)
    if len(docs) != 1:
        raise FileFormatError(f"expected one algebra, found {len(docs)}")
    return docs[0]


def dump(L: LeibnizAlgebra, annotations: dict[str, Subspace] | None = None) -> str:
    F = L.field
    out = []
    if L.name:
        out.append(f"name {L.name}")
    out.append("field Q" if not F.is_finite else f"field GF {F.p}")
    out.append("basis " + " ".join(L.labels))
    lab = L.labels
    for i, j, k, c in L.sparse_products():
        out.append(f"{lab[i]} {lab[j]} {lab[k]} {F.render(c)}")
    for key, S in (annotations or {}).items():
        out.append(f"annotation {key} " + " ; ".join(" ".join(r) for r in S.render()))
    return "\n".join(out) + "\n"


def dump_many(algebras) -> str:
    return "---\n".join(dump(L) for L in algebras)
