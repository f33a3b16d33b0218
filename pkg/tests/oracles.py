"""Independent high-precision oracles used by the test suite.

Everything here sums the defining series directly with mpmath at 50 digits
over a fixed window, with none of the log-space machinery of the package
under test.  Window half-width 200 is enough for every parameter set the
tests sample (the slow tails there decay at least like 0.8^j).
"""

import mpmath as mp

mp.mp.dps = 50

Q_ONE_BAND = 1e-6


def amp_log_magnitude(j, q, s, l):
    """ln |<j|l,alpha>_{s,q}| as an mpf."""
    j = mp.mpf(j)
    q = mp.mpf(q)
    s = mp.mpf(s)
    l = mp.mpf(l)
    if abs(q - 1) < Q_ONE_BAND:
        return l * j - s * j * j / 2
    lnq = mp.log(q)
    qn_l = (q**l - 1) / (q - 1)
    qn_j = (q**j - 1) / (q - 1)
    return j * qn_l - s * (qn_j / lnq - j / (q - 1))


def norm_squared(q, s, l, window=200):
    total = mp.mpf(0)
    for j in range(-window, window + 1):
        total += mp.exp(2 * amp_log_magnitude(j, q, s, l))
    return total


def overlap(q, s, l, alpha, h, beta, window=200):
    total = mp.mpc(0)
    dphase = mp.mpf(alpha) - mp.mpf(beta)
    for j in range(-window, window + 1):
        lm = amp_log_magnitude(j, q, s, l) + amp_log_magnitude(j, q, s, h)
        total += mp.exp(mp.mpc(lm, j * dphase))
    return total


def wavefunction(q, s, l, alpha, phi, window=200):
    total = mp.mpc(0)
    rel = mp.mpf(phi) - mp.mpf(alpha)
    for j in range(-window, window + 1):
        total += mp.exp(mp.mpc(amp_log_magnitude(j, q, s, l), j * rel))
    return total


def expectation_j(q, s, l, window=200):
    num = mp.mpf(0)
    den = mp.mpf(0)
    q_ = mp.mpf(q)
    for j in range(-window, window + 1):
        w = mp.exp(2 * amp_log_magnitude(j, q, s, l))
        if abs(mp.mpf(q) - 1) < Q_ONE_BAND:
            v = mp.mpf(j)
        else:
            v = (q_**j - 1) / (q_ - 1)
        num += v * w
        den += w
    return num / den


def theta3(z, tau, window=60):
    z = mp.mpc(z)
    tau = mp.mpc(tau)
    total = mp.mpc(0)
    for j in range(-window, window + 1):
        total += mp.exp(1j * mp.pi * tau * j * j + 2j * mp.pi * j * z)
    return total


def theta2(z, tau, window=60):
    z = mp.mpc(z)
    tau = mp.mpc(tau)
    total = mp.mpc(0)
    for j in range(-window, window + 1):
        m = j + mp.mpf(1) / 2
        total += mp.exp(1j * mp.pi * tau * m * m + 2j * mp.pi * m * z)
    return total


def to_complex(x):
    return complex(x)
