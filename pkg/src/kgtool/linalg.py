def integer_rank(rows):
    """Exact rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        piv = a[rank][col]
        for r in range(rank + 1, len(a)):
            lead = a[r][col]
            a[r] = [(piv * a[r][j] - lead * a[rank][j]) // prev for j in range(ncols)]
        prev = piv
        rank += 1
        if rank == len(a):
            break
    return rank
