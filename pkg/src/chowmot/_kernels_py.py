"""Pure-Python truncated monomial kernels.

Same contract as the compiled ``_kernels`` extension; used when the extension
is unavailable or ``CHOWMOT_PURE_PYTHON`` is set.
"""


def truncated_mul(caps, a_exps, a_nums, b_exps, b_nums):
    """Multiply two integer-coefficient polynomials modulo ``h_i^(caps[i]+1)``.

    Exponents are tuples, coefficients are Python ints.  Returns a dict
    ``{exponent: coefficient}`` with zero entries removed.
    """
    out = {}
    get = out.get
    for ea, ca in zip(a_exps, a_nums):
        for eb, cb in zip(b_exps, b_nums):
            e = tuple([x + y for x, y in zip(ea, eb)])
            for x, c in zip(e, caps):
                if x > c:
                    break
            else:
                out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}
