"""Type-preserving machinery on noncrossing partitions.

rho rebuilds the unique nonnesting partition with the same block maxima and
sizes.  xi is an involution exchanging nonnested and nonaligned blocks,
assembled from the prefix / connected / tail decompositions.  iota reorders
the components spanned by nonnested blocks.  Composing these with the
signed-partition interpretations gives type-preserving bijections between
noncrossing and nonnesting partitions of types B, C and D.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EMPTY,
    Block,
    InternalInvariantError,
    SetPartition,
    ValidationError,
    nonaligned_blocks,
    nonnested_blocks,
    nonnesting_partitions,
    slice_partition,
)
from .interpret import (
    phi_nc_b,
    phi_nc_b_inverse,
    phi_nc_d,
    phi_nc_d_inverse,
    phi_nn_b,
    phi_nn_b_inverse,
    phi_nn_c,
    phi_nn_c_inverse,
    phi_nn_d,
    phi_nn_d_inverse,
)
from .models import MarkedPair, MarkedTriple, is_member, validate_marked
from .signed import SignedPartition


# ---------------------------------------------------------------------------
# rho: profile-preserving bijection onto nonnesting partitions


def _profile(p: SetPartition) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((b[-1], len(b)) for b in p.blocks))


def _build_from_profile(profile, nonnesting: bool) -> SetPartition:
    """Scan n..1 and attach each non-maximum to an unfinished block.

    Attaching to the unfinished block with the largest (smallest) current
    minimum is forced when no two arcs may nest (cross), so the result is the
    unique partition of the requested kind with the given maxima and sizes.
    """
    if not profile:
        return EMPTY
    n = profile[-1][0]
    need = {mx: size for mx, size in profile}
    if len(need) != len(profile):
        raise InternalInvariantError("block maxima must be distinct")
    open_blocks: list[list[int]] = []  # kept sorted by current minimum, ascending
    done: list[Block] = []
    for p in range(n, 0, -1):
        if p in need:
            blk = [p]
            if need[p] == 1:
                done.append((p,))
            else:
                open_blocks.insert(0, blk)
        else:
            if not open_blocks:
                raise InternalInvariantError(f"no block can absorb {p}")
            blk = open_blocks.pop(-1 if nonnesting else 0)
            blk.insert(0, p)
            if len(blk) == need[blk[-1]]:
                done.append(tuple(blk))
            else:
                open_blocks.insert(0, blk)
    if open_blocks:
        raise InternalInvariantError("unfinished blocks remain")
    return SetPartition(n, tuple(sorted(done)))


def rho(p: SetPartition, check: bool = True) -> SetPartition:
    """The unique nonnesting partition with the same block maxima and sizes."""
    if check and not is_member(p, "nc_a"):
        raise ValidationError("not a noncrossing partition")
    return _build_from_profile(_profile(p), nonnesting=True)


def rho_inverse(p: SetPartition, check: bool = True) -> SetPartition:
    """The unique noncrossing partition with the same block maxima and sizes."""
    if check and not is_member(p, "nn_a"):
        raise ValidationError("not a nonnesting partition")
    return _build_from_profile(_profile(p), nonnesting=False)


_rho_index: dict[int, dict[tuple, SetPartition]] = {}


def rho_by_search(p: SetPartition) -> SetPartition:
    """Reference route: look the profile up in an index of all nonnesting partitions."""
    idx = _rho_index.get(p.n)
    if idx is None:
        idx = {_profile(q): q for q in nonnesting_partitions(p.n)}
        _rho_index[p.n] = idx
    return idx[_profile(p)]


def _transfer_marks(marks, src_blocks, dst_blocks) -> tuple[Block, ...]:
    pos = {b: i for i, b in enumerate(src_blocks)}
    return tuple(sorted((dst_blocks[pos[b]] for b in marks), key=lambda b: b[-1]))


def rho_bar(m: MarkedPair, check: bool = True) -> MarkedPair:
    """Apply rho and carry the marks across by position among max-sorted blocks."""
    if check and not validate_marked(m, "nc_na"):
        raise ValidationError("not a marked noncrossing pair with nonaligned marks")
    image = rho(m.sigma, check=False)
    src = tuple(sorted(m.sigma.blocks, key=lambda b: b[-1]))
    dst = tuple(sorted(image.blocks, key=lambda b: b[-1]))
    for a, b in zip(src, dst):
        if a[-1] != b[-1]:
            raise InternalInvariantError("block maxima must be preserved")
    return MarkedPair(image, _transfer_marks(m.marked, src, dst))


def rho_bar_inverse(m: MarkedPair, check: bool = True) -> MarkedPair:
    if check and not validate_marked(m, "nn_na"):
        raise ValidationError("not a marked nonnesting pair with nonaligned marks")
    image = rho_inverse(m.sigma, check=False)
    src = tuple(sorted(m.sigma.blocks, key=lambda b: b[-1]))
    dst = tuple(sorted(image.blocks, key=lambda b: b[-1]))
    return MarkedPair(image, _transfer_marks(m.marked, src, dst))


# ---------------------------------------------------------------------------
# The concatenation algebra


def uplus(a: SetPartition, b: SetPartition) -> SetPartition:
    """Concatenate, shifting the second partition past the first."""
    shifted = tuple(tuple(x + a.n for x in blk) for blk in b.blocks)
    return SetPartition(a.n + b.n, tuple(sorted(a.blocks + shifted)))


def is_connected(p: SetPartition) -> bool:
    """1 and n lie in the same block (false for the empty partition)."""
    return p.n >= 1 and p.n in p.block_containing(1)


def star(a: SetPartition, b: SetPartition) -> SetPartition:
    """Concatenate and attach one new final element to the connected part's block."""
    if a.n == 0:
        return uplus(b, SetPartition(1, ((1,),)))
    if not is_connected(a):
        raise ValidationError("the first argument must be connected or empty")
    u = uplus(a, b)
    top = u.n + 1
    blocks = tuple(blk + (top,) if a.n in blk else blk for blk in u.blocks)
    return SetPartition(top, tuple(sorted(blocks)))


@dataclass(frozen=True)
class NcDecomposition:
    prefix: SetPartition
    connected_part: SetPartition
    tail: SetPartition


def decompose(p: SetPartition, variant: int) -> NcDecomposition:
    """Split off the last component: p = prefix (+) (connected * tail).

    When {n} is its own block the split degenerates; variant 1 keeps the rest
    as the prefix, variant 2 as the tail.
    """
    if p.n < 1:
        raise ValidationError("cannot decompose the empty partition")
    if variant not in (1, 2):
        raise ValidationError("variant must be 1 or 2")
    n = p.n
    top_block = p.block_containing(n)
    if top_block == (n,):
        inner = slice_partition(p, 1, n - 1)
        out = NcDecomposition(inner, EMPTY, EMPTY) if variant == 1 else NcDecomposition(EMPTY, EMPTY, inner)
    else:
        lo, second = top_block[0], top_block[-2]
        out = NcDecomposition(
            slice_partition(p, 1, lo - 1),
            slice_partition(p, lo, second),
            slice_partition(p, second + 1, n - 1),
        )
    if uplus(out.prefix, star(out.connected_part, out.tail)) != p:
        raise InternalInvariantError("decomposition does not reassemble")
    return out


# ---------------------------------------------------------------------------
# xi: the involution exchanging nonnested and nonaligned blocks


def xi(p: SetPartition, check: bool = True) -> SetPartition:
    if check and not is_member(p, "nc_a"):
        raise ValidationError("not a noncrossing partition")
    n = p.n
    k = n
    block_sizes = {b[-1]: len(b) for b in p.blocks}
    while k >= 1 and p.block_containing(k) == (k,):
        k -= 1
    if k == 0:
        return p
    core = slice_partition(p, 1, k)

    firsts: list[tuple[SetPartition, SetPartition]] = []  # (connected_i, tail_i)
    cur = core
    while cur.n:
        d = decompose(cur, 1)
        firsts.append((d.connected_part, d.tail))
        cur = d.prefix

    seconds: list[tuple[SetPartition, SetPartition]] = []  # (connected_i, prefix_i)
    cur = core
    while cur.n:
        d = decompose(cur, 2)
        seconds.append((d.connected_part, d.prefix))
        cur = d.tail

    if firsts[0][0] != seconds[0][0]:
        raise InternalInvariantError("the two decompositions must share their first connected part")
    r, s = len(firsts), len(seconds)
    if r != len(nonnested_blocks(core)) or s != len(nonaligned_blocks(core)):
        raise InternalInvariantError("decomposition depth must match the special block counts")

    rest = EMPTY
    for i in range(r - 1, 0, -1):
        conn, tail = firsts[i]
        rest = uplus(tail, star(conn, rest))
    nested = star(firsts[0][0], rest)

    out = EMPTY
    for i in range(s - 1, 0, -1):
        conn, prefix = seconds[i]
        out = uplus(out, star(conn, prefix))
    out = uplus(out, nested)

    singles = tuple((i,) for i in range(k + 1, n + 1))
    result = SetPartition(n, tuple(sorted(out.blocks + singles)))
    if sorted(len(b) for b in result.blocks) != sorted(block_sizes.values()):
        raise InternalInvariantError("block type must be preserved")
    return result


def xi_bar(m: MarkedPair, check: bool = True) -> MarkedPair:
    """xi on the partition; marks move to the same positions among nonaligned blocks."""
    if check and not validate_marked(m, "nc_nn"):
        raise ValidationError("not a marked noncrossing pair with nonnested marks")
    image = xi(m.sigma, check=False)
    return MarkedPair(image, _transfer_marks(m.marked, nonnested_blocks(m.sigma), nonaligned_blocks(image)))


def xi_bar_inverse(m: MarkedPair, check: bool = True) -> MarkedPair:
    if check and not validate_marked(m, "nc_na"):
        raise ValidationError("not a marked noncrossing pair with nonaligned marks")
    image = xi(m.sigma, check=False)
    return MarkedPair(image, _transfer_marks(m.marked, nonaligned_blocks(m.sigma), nonnested_blocks(image)))


# ---------------------------------------------------------------------------
# Rearranging the components spanned by nonnested blocks


def rearrange(m: MarkedPair, perm: tuple[int, ...]) -> MarkedPair:
    """Permute the marked components by perm (1-based), fixing unmarked ones."""
    sigma = m.sigma
    spans = nonnested_blocks(sigma)
    lo = 1
    components = []
    for b in spans:
        if b[0] != lo:
            raise InternalInvariantError("nonnested block spans must tile the ground set")
        components.append(slice_partition(sigma, b[0], b[-1]))
        lo = b[-1] + 1
    if lo != sigma.n + 1:
        raise InternalInvariantError("nonnested block spans must tile the ground set")
    marked_idx = [i for i, b in enumerate(spans) if b in set(m.marked)]
    if sorted(perm) != list(range(1, len(marked_idx) + 1)):
        raise ValidationError("perm must be a permutation of the marked components")
    order = list(range(len(components)))
    for t, i in enumerate(marked_idx):
        order[i] = marked_idx[perm[t] - 1]
    out = EMPTY
    for i in order:
        out = uplus(out, components[i])
    new_spans = nonnested_blocks(out)
    return MarkedPair(out, tuple(new_spans[i] for i in marked_idx))


def _iota_perm_b(k: int) -> tuple[int, ...]:
    if k % 2 == 0:
        return tuple(range(1, k + 1))
    t = k // 2
    return (t + 1,) + tuple(range(1, t + 1)) + tuple(range(t + 2, k + 1))


def _iota_perm_d(k: int, epsilon: int) -> tuple[int, ...]:
    if k % 2 == 1:
        return _iota_perm_b(k)
    if epsilon == 0:
        return tuple(range(1, k + 1))
    t = k // 2
    return (t, t + 1) + tuple(range(1, t)) + tuple(range(t + 2, k + 1))


def _invert_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v - 1] = i + 1
    return tuple(inv)


def iota_b(m: MarkedPair, check: bool = True) -> MarkedPair:
    """Move the middle marked component to the front when their count is odd."""
    if check and not validate_marked(m, "nc_nn"):
        raise ValidationError("not a marked noncrossing pair with nonnested marks")
    return rearrange(m, _iota_perm_b(len(m.marked)))


def iota_b_inverse(m: MarkedPair, check: bool = True) -> MarkedPair:
    if check and not validate_marked(m, "nc_nn"):
        raise ValidationError("not a marked noncrossing pair with nonnested marks")
    return rearrange(m, _invert_perm(_iota_perm_b(len(m.marked))))


def iota_d(t: MarkedTriple, check: bool = True) -> MarkedTriple:
    """Bring the component(s) that will absorb the top element to the front."""
    if check and not validate_marked(t, "nc_nn_pm"):
        raise ValidationError("not a marked noncrossing triple with nonnested marks")
    out = rearrange(t.pair, _iota_perm_d(len(t.marked), t.epsilon))
    return MarkedTriple(out.sigma, out.marked, t.epsilon)


def iota_d_inverse(t: MarkedTriple, check: bool = True) -> MarkedTriple:
    if check and not validate_marked(t, "nc_nn_pm"):
        raise ValidationError("not a marked noncrossing triple with nonnested marks")
    out = rearrange(t.pair, _invert_perm(_iota_perm_d(len(t.marked), t.epsilon)))
    return MarkedTriple(out.sigma, out.marked, t.epsilon)


# ---------------------------------------------------------------------------
# Composed type-preserving bijections


def nc_to_nn(family: str, p: SignedPartition) -> SignedPartition:
    """Type-preserving bijection from the noncrossing to the nonnesting family."""
    fam = family.upper()
    if fam == "B":
        m = iota_b(phi_nc_b(p))
        return phi_nn_b_inverse(rho_bar(xi_bar(m, check=False), check=False), check=False)
    if fam == "C":
        m = phi_nc_b(p)
        return phi_nn_c_inverse(rho_bar(xi_bar(m, check=False), check=False), check=False)
    if fam == "D":
        t = iota_d(phi_nc_d(p))
        pair = rho_bar(xi_bar(t.pair, check=False), check=False)
        return phi_nn_d_inverse(MarkedTriple(pair.sigma, pair.marked, t.epsilon), check=False)
    raise ValidationError(f"unknown family {family!r}")


def nn_to_nc(family: str, p: SignedPartition) -> SignedPartition:
    fam = family.upper()
    if fam == "B":
        m = xi_bar_inverse(rho_bar_inverse(phi_nn_b(p)), check=False)
        return phi_nc_b_inverse(iota_b_inverse(m, check=False), check=False)
    if fam == "C":
        m = xi_bar_inverse(rho_bar_inverse(phi_nn_c(p)), check=False)
        return phi_nc_b_inverse(m, check=False)
    if fam == "D":
        t = phi_nn_d(p)
        pair = xi_bar_inverse(rho_bar_inverse(t.pair, check=False), check=False)
        back = iota_d_inverse(MarkedTriple(pair.sigma, pair.marked, t.epsilon), check=False)
        return phi_nc_d_inverse(back, check=False)
    raise ValidationError(f"unknown family {family!r}")
