"""Vertex labels for base and derived complexes.

A label is one of four kinds:

* ``Atom``  -- a named base vertex, e.g. ``0`` or ``c``;
* ``Tuple`` -- a vertex of a simplicial power, one coordinate per factor;
* ``Bary``  -- the barycenter of a simplex (a set of labels);
* ``Orbit`` -- a vertex of a quotient complex (a set of labels).

Canonical text forms: ``a``, ``(a,b)``, ``{a,b}``, ``[a|b]``.
"""
from __future__ import annotations

import re
from typing import Any, Iterable

ATOM, TUPLE, BARY, ORBIT = range(4)
_KIND_NAMES = ("atom", "tuple", "bary", "orbit")
_INT_RE = re.compile(r"-?\d+\Z")
# reserved so that the canonical text form stays injective
_RESERVED = set("(){}[],|")


def _atom_key(text: str) -> tuple:
    # integer-looking atoms sort numerically and before the others
    if _INT_RE.match(text):
        return (0, int(text), text)
    return (1, 0, text)


class VertexLabel:
    """Immutable, hashable vertex label with a total canonical order."""

    __slots__ = ("kind", "value", "_hash", "_key")

    def __init__(self, kind: int, value: Any):
        if kind == ATOM:
            if not isinstance(value, str):
                raise TypeError(f"atom label must be a string, got {value!r}")
            if not value or _RESERVED.intersection(value):
                raise ValueError(f"invalid atom name {value!r}")
            key = (ATOM, _atom_key(value))
        elif kind == TUPLE:
            value = tuple(value)
            if not value:
                raise ValueError("tuple label needs at least one coordinate")
            key = (TUPLE, tuple(v._key for v in value))
        elif kind in (BARY, ORBIT):
            members = set(value)
            if len(members) != len(value):
                raise ValueError(f"duplicate members in {_KIND_NAMES[kind]} label")
            if not members:
                raise ValueError(f"empty {_KIND_NAMES[kind]} label")
            value = tuple(sorted(members, key=sort_key))
            key = (kind, tuple(v._key for v in value))
        else:
            raise ValueError(f"unknown label kind {kind}")
        self.kind = kind
        self.value = value
        self._key = key
        self._hash = hash(key)

    def __eq__(self, other):
        if not isinstance(other, VertexLabel):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other: VertexLabel) -> bool:
        return self._key < other._key

    def __le__(self, other: VertexLabel) -> bool:
        return self._key <= other._key

    def __gt__(self, other: VertexLabel) -> bool:
        return self._key > other._key

    def __ge__(self, other: VertexLabel) -> bool:
        return self._key >= other._key

    def __repr__(self):
        return f"<{_KIND_NAMES[self.kind]} {self}>"

    def __str__(self):
        if self.kind == ATOM:
            return self.value
        inner = [str(v) for v in self.value]
        if self.kind == TUPLE:
            return "(" + ",".join(inner) + ")"
        if self.kind == BARY:
            return "{" + ",".join(inner) + "}"
        return "[" + "|".join(inner) + "]"

    @property
    def members(self) -> tuple[VertexLabel, ...]:
        if self.kind == ATOM:
            raise TypeError("atom labels have no members")
        return self.value

    @property
    def kind_name(self) -> str:
        return _KIND_NAMES[self.kind]


def sort_key(label: VertexLabel) -> tuple:
    return label._key


def atom(name: Any) -> VertexLabel:
    return VertexLabel(ATOM, str(name))


def tup(items: Iterable[Any]) -> VertexLabel:
    return VertexLabel(TUPLE, [as_label(x) for x in items])


def bary(members: Iterable[Any]) -> VertexLabel:
    return VertexLabel(BARY, [as_label(x) for x in members])


def orbit(members: Iterable[Any]) -> VertexLabel:
    return VertexLabel(ORBIT, [as_label(x) for x in members])


def as_label(x: Any) -> VertexLabel:
    """Coerce plain Python data to a label.

    Strings and ints become atoms, tuples/lists become tuple labels and
    ``{"bary": [...]}`` / ``{"orbit": [...]}`` dicts become set labels.
    This is also the JSON decoding rule.
    """
    if isinstance(x, VertexLabel):
        return x
    if isinstance(x, bool):
        raise TypeError(f"cannot use {x!r} as a vertex label")
    if isinstance(x, (str, int)):
        return atom(x)
    if isinstance(x, (list, tuple)):
        return tup(x)
    if isinstance(x, dict) and len(x) == 1:
        (k, v), = x.items()
        if k == "bary":
            return bary(v)
        if k == "orbit":
            return orbit(v)
    raise TypeError(f"cannot interpret {x!r} as a vertex label")


def to_json(label: VertexLabel) -> Any:
    if label.kind == ATOM:
        return label.value
    inner = [to_json(v) for v in label.value]
    if label.kind == TUPLE:
        return inner
    return {label.kind_name: inner}


_CLOSE = {"(": ")", "{": "}", "[": "]"}


def parse_label(text: str) -> VertexLabel:
    """Inverse of ``str(label)``."""
    label, pos = _parse(text, 0)
    if pos != len(text):
        raise ValueError(f"trailing characters in label {text!r}")
    return label


def _parse(text: str, pos: int) -> tuple[VertexLabel, int]:
    if pos >= len(text):
        raise ValueError(f"truncated label {text!r}")
    opener = text[pos]
    if opener not in _CLOSE:
        end = pos
        while end < len(text) and text[end] not in _RESERVED:
            end += 1
        return atom(text[pos:end]), end
    sep = "|" if opener == "[" else ","
    items = []
    pos += 1
    while True:
        item, pos = _parse(text, pos)
        items.append(item)
        if pos >= len(text):
            raise ValueError(f"unbalanced label {text!r}")
        if text[pos] == _CLOSE[opener]:
            pos += 1
            break
        if text[pos] != sep:
            raise ValueError(f"unexpected {text[pos]!r} in label {text!r}")
        pos += 1
    kind = {"(": TUPLE, "{": BARY, "[": ORBIT}[opener]
    return VertexLabel(kind, items), pos
