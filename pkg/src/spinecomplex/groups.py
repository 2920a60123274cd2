"""Finitely presented groups: presentations from complexes, Tietze
simplification, abelianization via Smith normal form, and Todd-Coxeter
coset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gluing import (
    DisconnectedComplexError,
    GluingSpec,
    SpineError,
    build_skeleton,
)
from .words import Word, cyclic_reduce, free_reduce, invert_word

DEFAULT_MAX_COSETS = 200_000


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        known = set(self.generators)
        for rel in self.relators:
            for name, _ in rel:
                if name not in known:
                    raise ValueError(f"relator uses undeclared generator {name!r}")


def spanning_tree(spec: GluingSpec) -> tuple[str, ...]:
    """Breadth-first tree from the first declared piece, edges in declaration
    order.  Raises if the skeleton is disconnected."""
    skeleton = build_skeleton(spec)
    if not skeleton.connected:
        raise DisconnectedComplexError(
            f"skeleton has {skeleton.component_count} components"
        )
    if not spec.pieces:
        return ()
    visited = {spec.pieces[0][0]}
    queue = [spec.pieces[0][0]]
    tree: list[str] = []
    while queue:
        node = queue.pop(0)
        for m in spec.matchings:
            if m.left.piece == node and m.right.piece not in visited:
                other = m.right.piece
            elif m.right.piece == node and m.left.piece not in visited:
                other = m.left.piece
            else:
                continue
            tree.append(m.name)
            visited.add(other)
            queue.append(other)
    return tuple(tree)


def attached_disk_curves(spec: GluingSpec, curves) -> tuple[int, ...]:
    """1-based indices of the curves carrying disks, in attachment order."""
    if spec.disks is None:
        return tuple(c.index for c in curves)
    for idx in spec.disks:
        if not 1 <= idx <= len(curves):
            raise SpineError(
                f"disk index {idx} out of range: spec traces {len(curves)} curves"
            )
    return tuple(spec.disks)


def presentation_from_complex(spec: GluingSpec, curves) -> Presentation:
    """Generators are all skeleton edges; relators are one boundary word per
    attached disk plus a length-1 relator per spanning-tree edge."""
    tree = spanning_tree(spec)
    generators = tuple(m.name for m in spec.matchings)
    relators: list[Word] = []
    by_index = {c.index: c for c in curves}
    for idx in attached_disk_curves(spec, curves):
        relators.append(tuple(by_index[idx].word))
    for name in tree:
        relators.append(((name, 1),))
    return Presentation(generators, tuple(relators))


def _substitute(word: Word, name: str, replacement: Word) -> Word:
    out: list[tuple[str, int]] = []
    inv = invert_word(replacement)
    for lt in word:
        if lt[0] != name:
            out.append(lt)
        elif lt[1] > 0:
            out.extend(replacement)
        else:
            out.extend(inv)
    return free_reduce(tuple(out))


def tietze_simplify(p: Presentation, max_passes: int = 100) -> Presentation:
    """Best-effort shrinking of a presentation, preserving the group.

    Each pass cyclically reduces relators, drops empty ones, kills
    generators with length-1 relators, and eliminates any generator that
    some relator mentions exactly once.
    """
    gens = list(p.generators)
    rels = [cyclic_reduce(r) for r in p.relators]
    for _ in range(max_passes):
        changed = False
        rels = [cyclic_reduce(r) for r in rels]
        rels = [r for r in rels if r]

        # generators forced trivial by a length-1 relator
        trivial = {r[0][0] for r in rels if len(r) == 1}
        if trivial:
            gens = [g for g in gens if g not in trivial]
            rels = [
                cyclic_reduce(tuple(lt for lt in r if lt[0] not in trivial))
                for r in rels
            ]
            rels = [r for r in rels if r]
            changed = True

        # a generator occurring exactly once in some relator can be solved for
        for i, rel in enumerate(rels):
            target = None
            for name, _ in rel:
                if sum(1 for lt in rel if lt[0] == name) == 1:
                    target = name
                    break
            if target is None:
                continue
            pos = next(j for j, lt in enumerate(rel) if lt[0] == target)
            rot = rel[pos:] + rel[:pos]  # rot = target^e . rest
            rest = rot[1:]
            if rot[0][1] > 0:
                replacement = invert_word(rest)  # target = rest^-1
            else:
                replacement = rest  # target^-1 = rest
            gens = [g for g in gens if g != target]
            rels = [
                cyclic_reduce(_substitute(r, target, replacement))
                for j, r in enumerate(rels)
                if j != i
            ]
            rels = [r for r in rels if r]
            changed = True
            break

        if not changed:
            break
    # deduplicate identical relators, keeping first occurrences
    seen: set[Word] = set()
    unique: list[Word] = []
    for r in rels:
        if r not in seen:
            seen.add(r)
            unique.append(r)
    return Presentation(tuple(gens), tuple(unique))


# ---------------------------------------------------------------------------
# Smith normal form and abelianization


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Invariant factors of an integer matrix, in divisibility order.

    Exact arbitrary-precision arithmetic throughout; returns the positive
    diagonal entries (including 1s, excluding 0s).  The pivot is always the
    minimal nonzero entry of the remaining block, which keeps coefficient
    growth tame, and a pivot is only accepted once it divides the whole
    block, so the divisibility chain holds by construction.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (
                    pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        p = a[t][t]

        # one floor-division pass down the column and along the row; any
        # surviving entry is a remainder strictly smaller than the pivot,
        # so re-picking the pivot makes progress
        clean = True
        for i in range(t + 1, rows):
            q = a[i][t] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                clean = False
        for j in range(t + 1, cols):
            q = a[t][j] // p
            if q:
                for i in range(rows):
                    a[i][j] -= q * a[i][t]
            if a[t][j]:
                clean = False
        if not clean:
            continue

        offender = None
        for i in range(t + 1, rows):
            if any(a[i][j] % p for j in range(t + 1, cols)):
                offender = i
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        diag.append(p)
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianization(p: Presentation) -> AbelianInvariants:
    """First homology of the presented group from its exponent-sum matrix."""
    if not p.generators:
        return AbelianInvariants(0, ())
    index = {g: i for i, g in enumerate(p.generators)}
    matrix = []
    for rel in p.relators:
        row = [0] * len(p.generators)
        for name, exp in rel:
            row[index[name]] += exp
        matrix.append(row)
    if not matrix:
        return AbelianInvariants(len(p.generators), ())
    factors = smith_normal_form(matrix)
    rank = len(p.generators) - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return AbelianInvariants(rank, torsion)


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration


@dataclass(frozen=True)
class CosetResult:
    """Outcome of a coset enumeration over the trivial subgroup.

    ``order`` is the live coset count of a closed table (the group order);
    when the allocation budget is exhausted instead, ``order`` is None and
    ``limit`` records the budget.  ``action`` maps each generator (in
    presentation order) to its permutation of the cosets, coset 0 being the
    subgroup itself.
    """

    order: int | None
    limit: int | None = None
    action: tuple[tuple[int, ...], ...] | None = None

    @property
    def finite(self) -> bool:
        return self.order is not None


class CosetTableNotClosedError(SpineError):
    pass


class _BudgetExhausted(Exception):
    pass


def todd_coxeter(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetResult:
    """HLT-style coset enumeration with a hard allocation budget.

    Deterministic: cosets are processed in creation order, relators are
    scanned in declaration order, and missing neighbors are filled in
    letter order.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    ngens = len(p.generators)
    nletters = 2 * ngens  # letter 2i = generator i, letter 2i+1 = its inverse
    gen_index = {g: i for i, g in enumerate(p.generators)}

    def to_letters(word: Word) -> tuple[int, ...]:
        return tuple(
            2 * gen_index[name] + (0 if exp > 0 else 1) for name, exp in word
        )

    relators = [to_letters(cyclic_reduce(r)) for r in p.relators]
    relators = [r for r in relators if r]

    table: list[list[int | None]] = [[None] * nletters]
    rep: list[int] = [0]

    def find(x: int) -> int:
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    def define(alpha: int, letter: int) -> int:
        if len(table) >= max_cosets:
            raise _BudgetExhausted()
        beta = len(table)
        table.append([None] * nletters)
        rep.append(beta)
        table[alpha][letter] = beta
        table[beta][letter ^ 1] = alpha
        return beta

    def coincidence(alpha: int, beta: int) -> None:
        queue: list[int] = []

        def merge(x: int, y: int) -> None:
            x, y = find(x), find(y)
            if x == y:
                return
            if y < x:
                x, y = y, x
            rep[y] = x
            queue.append(y)

        merge(alpha, beta)
        while queue:
            gamma = queue.pop()
            row = table[gamma]
            for letter in range(nletters):
                delta = row[letter]
                if delta is None:
                    continue
                table[delta][letter ^ 1] = None
                mu, nu = find(gamma), find(delta)
                if table[mu][letter] is not None:
                    merge(nu, table[mu][letter])
                elif table[nu][letter ^ 1] is not None:
                    merge(mu, table[nu][letter ^ 1])
                else:
                    table[mu][letter] = nu
                    table[nu][letter ^ 1] = mu

    def scan_and_fill(alpha: int, rel: tuple[int, ...]) -> None:
        f, i = alpha, 0
        b, j = alpha, len(rel) - 1
        while True:
            while i <= j and table[f][rel[i]] is not None:
                f = find(table[f][rel[i]])
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][rel[j] ^ 1] is not None:
                b = find(table[b][rel[j] ^ 1])
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][rel[i]] = b
                table[b][rel[i] ^ 1] = f
                return
            f = define(f, rel[i])
            i += 1

    try:
        alpha = 0
        while alpha < len(table):
            if find(alpha) != alpha:
                alpha += 1
                continue
            for rel in relators:
                scan_and_fill(alpha, rel)
                if find(alpha) != alpha:
                    break
            if find(alpha) == alpha:
                for letter in range(nletters):
                    if table[alpha][letter] is None:
                        define(alpha, letter)
            alpha += 1
    except _BudgetExhausted:
        return CosetResult(order=None, limit=max_cosets)

    live = [x for x in range(len(table)) if find(x) == x]
    renumber = {x: i for i, x in enumerate(live)}
    action = tuple(
        tuple(renumber[find(table[x][2 * g])] for x in live)  # type: ignore[index]
        for g in range(ngens)
    )
    return CosetResult(order=len(live), action=action)


@dataclass(frozen=True)
class BettiNumbers:
    b0: int
    b1: int
    b2: int


def betti_numbers(spec: GluingSpec, abelian: AbelianInvariants, curves=None) -> BettiNumbers:
    """Betti numbers of a connected complex from its chi and H1 rank."""
    from .invariants import euler_characteristic
    from .tracer import trace_boundary

    skeleton = build_skeleton(spec)
    if not skeleton.connected:
        raise DisconnectedComplexError(
            f"skeleton has {skeleton.component_count} components"
        )
    if curves is None:
        curves = trace_boundary(spec)
    chi = euler_characteristic(spec, curves)
    b1 = abelian.rank
    return BettiNumbers(1, b1, chi - 1 + b1)
