# Compiled inner loops for the Lebesgue functions. Everything trigonometric
# is precomputed by the caller; the loops only multiply, add and divide.
import numba
import numpy as np


@numba.njit(cache=True)
def vp_abs_sum(sh_t, ch_t, s_mt, c_mt, sh_k, ch_k, s_mk, c_mk, coef, skip):
    """out[i] = sum_k coef[k] * |Psi(t_i, t_k)|, leaving out k == skip[i]."""
    n_t = sh_t.shape[0]
    n_k = sh_k.shape[0]
    out = np.empty(n_t)
    for i in range(n_t):
        a = sh_t[i]
        b = ch_t[i]
        s = s_mt[i]
        c = c_mt[i]
        acc = 0.0
        for k in range(n_k):
            if k == skip[i]:
                continue
            d_minus = a * ch_k[k] - b * sh_k[k]  # sin((t - t_k)/2)
            d_plus = a * ch_k[k] + b * sh_k[k]  # sin((t + t_k)/2)
            num_minus = s * c_mk[k] - c * s_mk[k]  # sin(m(t - t_k))
            num_plus = s * c_mk[k] + c * s_mk[k]  # sin(m(t + t_k))
            dm2 = d_minus * d_minus
            dp2 = d_plus * d_plus
            acc += coef[k] * abs(num_minus * dp2 - num_plus * dm2) / (dm2 * dp2)
        out[i] = acc
    return out


@numba.njit(cache=True)
def lagrange_abs_sum(sh_t, ch_t, sh_k, ch_k, coef, skip):
    """out[i] = sum_k coef[k] / |cos t_i - cos t_k|, leaving out k == skip[i]."""
    n_t = sh_t.shape[0]
    n_k = sh_k.shape[0]
    out = np.empty(n_t)
    for i in range(n_t):
        a = sh_t[i]
        b = ch_t[i]
        acc = 0.0
        for k in range(n_k):
            if k == skip[i]:
                continue
            d_minus = a * ch_k[k] - b * sh_k[k]
            d_plus = a * ch_k[k] + b * sh_k[k]
            acc += coef[k] / abs(2.0 * d_minus * d_plus)
        out[i] = acc
    return out
