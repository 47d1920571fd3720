"""Finitely presented groups: a small presentation grammar and HLT-style
coset enumeration over the trivial subgroup.

Grammar (whitespace insensitive):

    presentation := '<' generators '|' relators '>'
    generators   := ident ((',' | space) ident)*
    relators     := relator (',' relator)*
    relator      := word | word '=' word        (stored as lhs * rhs^-1)
    word         := factor ('*' factor)*
    factor       := atom ('^' integer)?         (integer may be negative)
    atom         := ident | '(' word ')' | '1'  ('1' is the empty word)

Enumeration is plain HLT with a single lookahead pass at the coset cap and
path-compressed coincidence merging; the final table is renumbered to BFS
discovery order so identical input text always yields an identical group.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

import numpy as np

from .core import FiniteGroup, from_table

__all__ = [
    "ParseError",
    "UndeclaredGenerator",
    "CosetLimitExceeded",
    "Presentation",
    "parse",
    "enumerate_presentation",
    "DEFAULT_MAX_COSETS",
]

DEFAULT_MAX_COSETS = 100_000

Word = tuple[tuple[int, int], ...]  # ((generator index, exponent), ...)


class ParseError(ValueError):
    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"line {line}, column {column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected


class UndeclaredGenerator(ValueError):
    def __init__(self, name: str):
        super().__init__(f"generator {name!r} used in a relator but not declared")
        self.name = name


class CosetLimitExceeded(RuntimeError):
    """Enumeration hit the coset cap; the group may be infinite or too large."""

    def __init__(self, max_cosets: int):
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets")
        self.max_cosets = max_cosets


def free_reduce(word) -> Word:
    out: list[list[int]] = []
    for gen, exp in word:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


def invert_word(word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True)
class Presentation:
    """Generator names plus freely reduced relator words."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        return "*".join(g if e == 1 else f"{g}^{e}"
                        for g, e in ((self.generators[i], e) for i, e in word))

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(self.word_str(w) for w in self.relators)
        return f"< {gens} | {rels} >"


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|-?\d+|[<>|,*^()=]|\S")

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


class _Tokens:
    def __init__(self, text: str):
        self.items = []  # (token, line, column)
        for lineno, line in enumerate(text.splitlines() or [""], start=1):
            for m in _TOKEN_RE.finditer(line):
                self.items.append((m.group(0), lineno, m.start() + 1))
        self.pos = 0
        self.last = (text.count("\n") + 1, len(text.splitlines()[-1]) + 1 if text.splitlines() else 1)

    def peek(self):
        return self.items[self.pos][0] if self.pos < len(self.items) else None

    def where(self):
        if self.pos < len(self.items):
            _, ln, col = self.items[self.pos]
            return ln, col
        return self.last

    def take(self):
        tok = self.items[self.pos]
        self.pos += 1
        return tok[0]

    def expect(self, token: str):
        if self.peek() != token:
            ln, col = self.where()
            raise ParseError(ln, col, repr(token))
        return self.take()


def parse(text: str) -> Presentation:
    """Parse '< gens | relators >' into a validated Presentation."""
    toks = _Tokens(text)
    toks.expect("<")
    gens: list[str] = []
    while True:
        tok = toks.peek()
        if tok == ",":
            toks.take()
            continue
        if tok == "|":
            break
        if tok is None or not _IDENT_RE.match(tok or ""):
            ln, col = toks.where()
            raise ParseError(ln, col, "generator name or '|'")
        name = toks.take()
        if name in gens:
            ln, col = toks.where()
            raise ParseError(ln, col, f"unique generator name (duplicate {name!r})")
        gens.append(name)
    if not gens:
        ln, col = toks.where()
        raise ParseError(ln, col, "at least one generator")
    toks.expect("|")
    gen_index = {name: i for i, name in enumerate(gens)}

    relators: list[Word] = []
    while toks.peek() != ">":
        relators.append(_parse_relator(toks, gen_index))
        if toks.peek() == ",":
            toks.take()
        elif toks.peek() != ">":
            ln, col = toks.where()
            raise ParseError(ln, col, "',' or '>'")
    toks.expect(">")
    if toks.peek() is not None:
        ln, col = toks.where()
        raise ParseError(ln, col, "end of input")
    return Presentation(tuple(gens), tuple(relators))


def _parse_relator(toks: _Tokens, gen_index: dict[str, int]) -> Word:
    lhs = _parse_word(toks, gen_index)
    if toks.peek() == "=":
        toks.take()
        rhs = _parse_word(toks, gen_index)
        return free_reduce(lhs + invert_word(rhs))
    return free_reduce(lhs)


def _parse_word(toks: _Tokens, gen_index: dict[str, int]) -> Word:
    parts = [_parse_factor(toks, gen_index)]
    while toks.peek() == "*":
        toks.take()
        parts.append(_parse_factor(toks, gen_index))
    return free_reduce(tuple(x for p in parts for x in p))


def _parse_factor(toks: _Tokens, gen_index: dict[str, int]) -> Word:
    atom = _parse_atom(toks, gen_index)
    if toks.peek() == "^":
        toks.take()
        tok = toks.peek()
        if tok is None or not re.fullmatch(r"-?\d+", tok):
            ln, col = toks.where()
            raise ParseError(ln, col, "integer exponent")
        exp = int(toks.take())
        if exp < 0:
            atom = invert_word(atom)
            exp = -exp
        return free_reduce(atom * exp)
    return atom


def _parse_atom(toks: _Tokens, gen_index: dict[str, int]) -> Word:
    tok = toks.peek()
    if tok == "(":
        toks.take()
        inner = _parse_word(toks, gen_index)
        toks.expect(")")
        return inner
    if tok == "1":
        toks.take()
        return ()
    if tok is not None and _IDENT_RE.match(tok):
        name = toks.take()
        if name not in gen_index:
            raise UndeclaredGenerator(name)
        return ((gen_index[name], 1),)
    ln, col = toks.where()
    raise ParseError(ln, col, "generator, '(' or '1'")


# --- coset enumeration -------------------------------------------------------

def _letters(word: Word) -> list[int]:
    """Flatten a word into letters: 2*g for a generator, 2*g+1 for its inverse."""
    out = []
    for g, e in word:
        letter = 2 * g if e > 0 else 2 * g + 1
        out.extend([letter] * abs(e))
    return out


def _inv_letter(x: int) -> int:
    return x ^ 1


class _CosetTable:
    def __init__(self, ngens: int, max_cosets: int):
        self.width = 2 * ngens
        self.max_cosets = max_cosets
        self.rows: list[list] = [[None] * self.width]
        self.p = [0]
        self.queue: list[int] = []

    # union-find over coset numbers; smaller representative wins
    def rep(self, k: int) -> int:
        while self.p[k] != k:
            self.p[k] = self.p[self.p[k]]
            k = self.p[k]
        return k

    def is_live(self, k: int) -> bool:
        return self.p[k] == k

    def live_count(self) -> int:
        return sum(1 for i in range(len(self.p)) if self.p[i] == i)

    def define(self, alpha: int, x: int) -> int:
        beta = len(self.rows)
        if beta >= self.max_cosets:
            raise CosetLimitExceeded(self.max_cosets)
        self.rows.append([None] * self.width)
        self.p.append(beta)
        self.rows[alpha][x] = beta
        self.rows[beta][_inv_letter(x)] = alpha
        return beta

    def _merge(self, a: int, b: int):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.p[hi] = lo
        self.queue.append(hi)

    def coincidence(self, alpha: int, beta: int):
        self._merge(alpha, beta)
        i = 0
        while i < len(self.queue):
            y = self.queue[i]
            i += 1
            for x in range(self.width):
                delta = self.rows[y][x]
                if delta is None:
                    continue
                self.rows[delta][_inv_letter(x)] = None
                mu, nu = self.rep(y), self.rep(delta)
                if self.rows[mu][x] is not None:
                    self._merge(nu, self.rows[mu][x])
                elif self.rows[nu][_inv_letter(x)] is not None:
                    self._merge(mu, self.rows[nu][_inv_letter(x)])
                else:
                    self.rows[mu][x] = nu
                    self.rows[nu][_inv_letter(x)] = mu
        self.queue.clear()

    def scan_and_fill(self, alpha: int, letters: list[int], fill: bool = True):
        # rows of live cosets may hold stale pointers to dead cosets, so every
        # traversal step re-resolves through the union-find
        if not letters:
            return
        f, i = alpha, 0
        b, j = alpha, len(letters) - 1
        while True:
            while i <= j and self.rows[f][letters[i]] is not None:
                f = self.rep(self.rows[f][letters[i]])
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.rows[b][_inv_letter(letters[j])] is not None:
                b = self.rep(self.rows[b][_inv_letter(letters[j])])
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.rows[f][letters[i]] = b
                self.rows[b][_inv_letter(letters[i])] = f
                return
            if not fill:
                return
            self.define(f, letters[i])

    def compact(self):
        """Drop dead cosets and renumber the survivors contiguously."""
        live = [k for k in range(len(self.rows)) if self.p[k] == k]
        renum = {old: new for new, old in enumerate(live)}
        new_rows = []
        for old in live:
            new_rows.append([None if v is None else renum[self.rep(v)]
                             for v in self.rows[old]])
        self.rows = new_rows
        self.p = list(range(len(live)))
        self.queue.clear()


def enumerate_presentation(pres: Presentation, max_cosets: int | None = None) -> FiniteGroup:
    """Run coset enumeration over the trivial subgroup and return the
    presented group's multiplication table.

    Element 0 is the identity and element order is coset discovery order.
    max_cosets defaults to NONCENT_MAX_COSETS from the environment, else
    100000.  Raises CosetLimitExceeded when the cap is hit even after a
    lookahead pass (possibly-infinite group).
    """
    if max_cosets is None:
        max_cosets = int(os.environ.get("NONCENT_MAX_COSETS", DEFAULT_MAX_COSETS))
    rel_letters = [_letters(w) for w in pres.relators]
    ct = _CosetTable(len(pres.generators), max_cosets)
    tried_lookahead = False

    alpha = 0
    while alpha < len(ct.rows):
        if not ct.is_live(alpha):
            alpha += 1
            continue
        try:
            for letters in rel_letters:
                ct.scan_and_fill(alpha, letters)
                if not ct.is_live(alpha):
                    break
            if ct.is_live(alpha):
                for x in range(ct.width):
                    if ct.rows[alpha][x] is None:
                        ct.define(alpha, x)
        except CosetLimitExceeded:
            if tried_lookahead:
                raise
            tried_lookahead = True
            _lookahead(ct, rel_letters)
            ct.compact()
            if len(ct.rows) >= ct.max_cosets:
                raise
            alpha = 0  # renumbering invalidated the cursor; rescans are cheap
            continue
        alpha += 1

    return _table_to_group(ct, pres)


def _lookahead(ct: _CosetTable, rel_letters: list[list[int]]):
    """Scan every live coset against every relator without defining, to flush
    coincidences before giving up."""
    for alpha in range(len(ct.rows)):
        if not ct.is_live(alpha):
            continue
        for letters in rel_letters:
            ct.scan_and_fill(alpha, letters, fill=False)
            if not ct.is_live(alpha):
                break


def _table_to_group(ct: _CosetTable, pres: Presentation) -> FiniteGroup:
    # renumber live cosets in BFS discovery order from coset 0
    start = ct.rep(0)
    order: list[int] = [start]
    number = {start: 0}
    words: list[list[int]] = [[]]
    qi = 0
    while qi < len(order):
        cur = order[qi]
        qi += 1
        for x in range(ct.width):
            nxt = ct.rows[cur][x]
            if nxt is None:
                raise CosetLimitExceeded(ct.max_cosets)  # incomplete table: not closed
            nxt = ct.rep(nxt)
            if nxt not in number:
                number[nxt] = len(order)
                order.append(nxt)
                words.append(words[qi - 1] + [x])
    n = len(order)

    def step(coset: int, letters: list[int]) -> int:
        for x in letters:
            coset = ct.rep(ct.rows[coset][x])
        return coset

    table = np.empty((n, n), dtype=np.int64)
    for j in range(n):
        wj = words[j]
        for i in range(n):
            table[i, j] = number[step(order[i], wj)]

    labels = []
    for w in words:
        if not w:
            labels.append("e")
        else:
            labels.append("*".join(pres.generators[x // 2] + ("" if x % 2 == 0 else "^-1")
                                   for x in w))
    return from_table(table, labels)
