"""Pure-Python word kernels.

Words are tuples of nonzero signed letter codes; -c is the inverse of c.
These two functions carry essentially all the run time of the package,
so a compiled twin lives in _kernels_cy.pyx with the same signatures.
"""

from __future__ import annotations


def reduce_letters(codes):
    """Freely reduce a sequence of letter codes.

    Returns the unique reduced tuple: no adjacent pair c, -c survives.
    """
    out = []
    push = out.append
    pop = out.pop
    for c in codes:
        if out and out[-1] == -c:
            pop()
        else:
            push(c)
    return tuple(out)


def substitute(codes, flat, offsets, size):
    """Replace every letter by its image word and freely reduce.

    flat/offsets pack 2*size image words back to back: slot k in
    [0, size) holds the image of letter k+1, slot size+k the image of
    -(k+1).  The image of slot k is flat[offsets[k]:offsets[k+1]].
    """
    out = []
    push = out.append
    pop = out.pop
    for c in codes:
        k = c - 1 if c > 0 else size - c - 1
        for idx in range(offsets[k], offsets[k + 1]):
            t = flat[idx]
            if out and out[-1] == -t:
                pop()
            else:
                push(t)
    return tuple(out)
