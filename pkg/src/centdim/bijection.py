"""Paths in the permutation-module tower versus set-partition pairs.

A walk of length 2k in the symmetric-group diagram (remove a cell at each
half step, add one back at each full step, starting from the one-row shape
(n)) matches a pair (P, T): P a set partition of {1..k} and T a filling of
the final shape by n - t zeros together with the t block maxima of P, each
used once, weakly increasing along rows and strictly increasing down
columns with zeros ranked below every positive value.

The walk is replayed by row insertion. Step i first uninserts the cell
lost at the half step, ejecting a value b: b = 0 opens the block {i},
otherwise i joins the block of b. It then writes i into the cell gained at
the full step. Reversing from (P, T) removes the entries k down to 1,
reinserting 0 for a singleton block and the second-largest member
otherwise.

Tableaux are tuples of tuples of ints; set partitions are tuples of tuples,
blocks ordered by minimum ("1,3|2" in text form).
"""

from bisect import bisect_left, bisect_right

from .young import is_partition


def tableau_shape(rows):
    return tuple(len(r) for r in rows)


def is_semistandard(rows):
    """Weakly increasing rows, strictly increasing columns, valid shape."""
    lengths = [len(r) for r in rows]
    if any(not row for row in rows):
        return False
    if any(lengths[i] < lengths[i + 1] for i in range(len(rows) - 1)):
        return False
    for row in rows:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(rows) - 1):
        if any(rows[i][j] >= rows[i + 1][j] for j in range(lengths[i + 1])):
            return False
    return True


def row_insert(rows, value):
    """Insert a value by row bumping; returns (new tableau, (row, col)).

    The entering value displaces the leftmost entry strictly greater than
    it (equal entries are passed over), so inserting 0 into a row of zeros
    appends. 1-based cell coordinates.
    """
    work = [list(r) for r in rows]
    level = 0
    while True:
        if level == len(work):
            work.append([value])
            box = (level + 1, 1)
            break
        row = work[level]
        j = bisect_right(row, value)
        if j == len(row):
            row.append(value)
            box = (level + 1, j + 1)
            break
        row[j], value = value, row[j]
        level += 1
    return tuple(tuple(r) for r in work), box


def row_uninsert(rows, corner):
    """Inverse bumping from a removable corner; returns (tableau, ejected).

    Walking upward, the removed value swaps with the rightmost entry
    strictly smaller than it in each row above; whatever leaves row one is
    the ejected value. Exact inverse of row_insert: reinserting the ejected
    value recreates the tableau and the corner.
    """
    r, c = corner
    if not (1 <= r <= len(rows)) or c != len(rows[r - 1]) or (
        r < len(rows) and len(rows[r]) >= c
    ):
        raise ValueError(f"({r},{c}) is not a removable corner of {tableau_shape(rows)}")
    work = [list(x) for x in rows]
    value = work[r - 1].pop()
    if not work[r - 1]:
        work.pop()
    for i in range(r - 2, -1, -1):
        row = work[i]
        j = bisect_left(row, value) - 1
        assert j >= 0, "reverse bump fell off the row"
        row[j], value = value, row[j]
    return tuple(tuple(x) for x in work), value


def _one_box_difference(bigger, smaller):
    """The 1-based (row, col) of the single cell in bigger but not smaller,
    or None when the shapes do not differ by exactly one cell."""
    big = tuple(bigger)
    small = tuple(smaller) + (0,) * (len(bigger) - len(smaller))
    if len(small) > len(big) or sum(big) - sum(tuple(smaller)) != 1:
        return None
    spot = None
    for i, (a, b) in enumerate(zip(big, small)):
        if a == b:
            continue
        if a != b + 1 or spot is not None:
            return None
        spot = (i + 1, a)
    return spot


def check_path(path, n):
    """Validate a vacillating walk; returns the tuple-of-tuples form."""
    shapes = tuple(tuple(p) for p in path)
    if len(shapes) % 2 == 0 or not shapes:
        raise ValueError("malformed path: need shapes at levels 0, 1/2, ..., k")
    for s in shapes:
        if s and not is_partition(s):
            raise ValueError(f"malformed path: bad shape {s}")
    if shapes[0] != (n,):
        raise ValueError(f"malformed path: must start at ({n},)")
    for i in range(1, len(shapes)):
        removing = i % 2 == 1
        down, up = (shapes[i - 1], shapes[i]) if removing else (shapes[i], shapes[i - 1])
        if _one_box_difference(down, up) is None:
            verb = "remove" if removing else "add"
            raise ValueError(
                f"malformed path: step {i} must {verb} one cell "
                f"({shapes[i - 1]} -> {shapes[i]})"
            )
    return shapes


def path_to_pair(path, n):
    """Replay a walk into its (set partition, zeroed tableau) pair."""
    shapes = check_path(path, n)
    k = (len(shapes) - 1) // 2
    tableau = ((0,) * n,)
    blocks = []
    for i in range(1, k + 1):
        prev, mid, nxt = shapes[2 * i - 2], shapes[2 * i - 1], shapes[2 * i]
        corner = _one_box_difference(prev, mid)
        tableau, ejected = row_uninsert(tableau, corner)
        if ejected == 0:
            blocks.append([i])
        else:
            home = next((b for b in blocks if b[-1] == ejected), None)
            assert home is not None, f"ejected value {ejected} is not a block maximum"
            home.append(i)
        row, col = _one_box_difference(nxt, mid)
        work = [list(r) for r in tableau]
        if row == len(work) + 1:
            work.append([i])
        else:
            work[row - 1].append(i)
        assert len(work[row - 1]) == col
        tableau = tuple(tuple(r) for r in work)
    return tuple(tuple(b) for b in blocks), tableau


def _check_pair(blocks, tableau, n):
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    members = sorted(x for b in blocks for x in b)
    k = len(members)
    if members != list(range(1, k + 1)) or any(not b for b in blocks):
        raise ValueError(f"incompatible pair: blocks must partition 1..{k}")
    blocks = tuple(sorted(blocks, key=lambda b: b[0]))
    rows = tuple(tuple(r) for r in tableau)
    if not rows or not is_semistandard(rows):
        raise ValueError("incompatible pair: tableau is not semistandard")
    if sum(tableau_shape(rows)) != n:
        raise ValueError(f"incompatible pair: tableau must have {n} cells")
    entries = sorted(x for r in rows for x in r)
    maxima = sorted(b[-1] for b in blocks)
    expected = [0] * (n - len(blocks)) + maxima
    if len(blocks) > n or entries != expected:
        raise ValueError(
            "incompatible pair: tableau entries must be the block maxima "
            f"with {n} - t zeros (got {entries}, wanted {expected})"
        )
    return blocks, rows, k


def pair_to_path(blocks, tableau, n):
    """Rebuild the walk from a (set partition, zeroed tableau) pair."""
    blocks, rows, k = _check_pair(blocks, tableau, n)
    working = [list(b) for b in blocks]
    shapes = [tableau_shape(rows)]
    for i in range(k, 0, -1):
        spot = next(
            (
                (ri + 1, ci + 1)
                for ri, row in enumerate(rows)
                for ci, x in enumerate(row)
                if x == i
            ),
            None,
        )
        assert spot is not None, f"entry {i} missing despite validation"
        work = [list(r) for r in rows]
        work[spot[0] - 1].pop()
        if not work[spot[0] - 1]:
            work.pop()
        rows = tuple(tuple(r) for r in work)
        shapes.append(tableau_shape(rows))
        home = next(b for b in working if b[-1] == i)
        if len(home) == 1:
            working.remove(home)
            reinsert = 0
        else:
            reinsert = home[-2]
            home.pop()
        rows, _ = row_insert(rows, reinsert)
        shapes.append(tableau_shape(rows))
    assert shapes[-1] == (n,) and all(x == 0 for r in rows for x in r)
    return tuple(reversed(shapes))


def format_set_partition(blocks):
    return "|".join(",".join(str(x) for x in b) for b in blocks) if blocks else ""


def parse_set_partition(text):
    text = text.strip()
    if not text:
        return ()
    try:
        blocks = tuple(
            tuple(int(x) for x in chunk.split(",")) for chunk in text.split("|")
        )
    except ValueError:
        raise ValueError(f"cannot parse set partition {text!r}") from None
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
