"""Scratch prototype: Meyer sampling numerics, residual magnitudes."""
import numpy as np

SQRT2 = np.sqrt(2.0)


def nu(x):
    x = np.clip(x, 0.0, 1.0)
    return x**4 * (35 - 84 * x + 70 * x**2 - 20 * x**3)


def meyer_psi_spectrum(w):
    aw = np.abs(w)
    out = np.zeros_like(w, dtype=complex)
    band1 = (aw > 2 * np.pi / 3) & (aw <= 4 * np.pi / 3)
    band2 = (aw > 4 * np.pi / 3) & (aw <= 8 * np.pi / 3)
    out[band1] = np.sin(np.pi / 2 * nu(3 * aw[band1] / (2 * np.pi) - 1))
    out[band2] = np.cos(np.pi / 2 * nu(3 * aw[band2] / (4 * np.pi) - 1))
    return out * np.exp(1j * w / 2)


def meyer_phi_spectrum(w):
    aw = np.abs(w)
    out = np.zeros_like(w, dtype=float)
    out[aw <= 2 * np.pi / 3] = 1.0
    band = (aw > 2 * np.pi / 3) & (aw <= 4 * np.pi / 3)
    out[band] = np.cos(np.pi / 2 * nu(3 * aw[band] / (2 * np.pi) - 1))
    return out.astype(complex)


def sample_from_spectrum(spec_fn, t0, dt, n, analytic=False):
    w = 2 * np.pi * np.fft.fftfreq(n, dt)
    spec = spec_fn(w)
    if analytic:
        spec = np.where(w > 0, SQRT2 * spec, 0.0)
    vals = np.fft.ifft(spec * np.exp(1j * w * t0)) / dt
    return vals


def daughter_freq(values, t0, dt, a, b):
    """Frequency-domain resampling: D(w) = sqrt|a| W(a w) e^{-jwb}."""
    n = len(values)
    w = 2 * np.pi * np.fft.fftfreq(n, dt)
    t = t0 + dt * np.arange(n)
    target = a * w
    keep = np.abs(target) <= np.pi / dt + 1e-12
    # trig-polynomial evaluation of the sample spectrum at a*w
    W = np.zeros(n, dtype=complex)
    # chunked to bound memory
    for i0 in range(0, n, 512):
        sl = slice(i0, min(i0 + 512, n))
        W[sl] = (np.exp(-1j * np.outer(target[sl], t)) @ values) * dt
    D = np.where(keep, np.sqrt(abs(a)) * W * np.exp(-1j * w * b), 0.0)
    vals = np.fft.ifft(D * np.exp(1j * w * t0)) / dt
    return vals


def report(tag, span, dt):
    n = int(round(2 * span / dt))
    t0 = -span
    psi = sample_from_spectrum(meyer_psi_spectrum, t0, dt, n).real.astype(complex)
    phi = sample_from_spectrum(meyer_phi_spectrum, t0, dt, n).real.astype(complex)
    print(f"== {tag}: span {span} dt {dt} n {n}")
    print("psi mean", abs(psi.sum() * dt), "energy-1", abs((np.abs(psi)**2).sum() * dt - 1))
    print("phi mean-1", abs(phi.sum() * dt - 1), "energy-1", abs((np.abs(phi)**2).sum() * dt - 1))
    print("max|psi| at ends:", np.abs(psi[:4]).max(), np.abs(psi[-4:]).max())
    d1 = daughter_freq(psi, t0, dt, 1.0, 0.0)
    d2 = daughter_freq(psi, t0, dt, 2.0, 0.0)
    print("daughter a=1 identity err", np.abs(d1 - psi).max())
    print("daughter a=2: mean", abs(d2.sum() * dt), "energy-1", abs((np.abs(d2)**2).sum() * dt - 1))
    ip12 = (d1 * np.conj(d2)).sum() * dt
    print("<psi1,psi2> =", abs(ip12))
    d3 = daughter_freq(psi, t0, dt, 3.0, 0.0)
    ip13 = (d1 * np.conj(d3)).sum() * dt
    print("<psi1,psi3> =", abs(ip13))
    # HH field
    f = (np.outer(np.conj(d1), d2) - np.outer(d2, np.conj(d1))) / SQRT2
    r_rows = np.abs(f.sum(axis=1) * dt).max()
    r_cols = np.abs(f.sum(axis=0) * dt).max()
    r_all = abs(f.sum() * dt * dt)
    print("prop1 residuals:", r_rows, r_cols, r_all)
    E = (np.abs(f) ** 2).sum() * dt * dt
    print("prop2 |E-1| =", abs(E - 1))
    # prop3: direct vs separable
    du = 2 * np.pi / (n * dt)
    F = np.fft.fft2(f) * dt * dt
    w = 2 * np.pi * np.fft.fftfreq(n, dt)
    absu = np.abs(w)
    mask1 = absu > 0
    inv = np.zeros_like(absu)
    inv[mask1] = 1.0 / absu[mask1]
    I_direct = ((np.abs(F) ** 2) * np.outer(inv, inv)).sum() * du * du
    spec1 = np.abs(meyer_psi_spectrum(1.0 * w)) ** 2
    spec2 = np.abs(meyer_psi_spectrum(2.0 * w)) ** 2
    S1 = (spec1 * inv).sum() * du
    S2 = (spec2 * inv).sum() * du
    I_sep = 1.0 * 2.0 * S1 * S2
    print("prop3 direct", I_direct, "sep", I_sep, "rel", abs(I_direct - I_sep) / I_sep)
    # LH field energy
    flh = (np.outer(phi, psi) - np.outer(psi, phi)) / SQRT2
    Elh = (np.abs(flh) ** 2).sum() * dt * dt
    print("LH energy-1:", abs(Elh - 1))
    # analytic mode degeneracy check
    psia = sample_from_spectrum(meyer_psi_spectrum, t0, dt, n, analytic=True)
    print("analytic energy-1", abs((np.abs(psia)**2).sum() * dt - 1), "max imag", np.abs(psia.imag).max())
    fa = (np.outer(np.conj(psia), psia) - np.outer(psia, np.conj(psia))) / SQRT2
    print("analytic a1=a2 field max", np.abs(fa).max())
    Ea = (np.abs(fa) ** 2).sum() * dt * dt
    print("analytic a1=a2 prop2 |E-1|", abs(Ea - 1))
    return dict(E=abs(E - 1), p1=max(r_rows, r_cols, r_all))


base = report("default", 16.0, 1.0 / 32)
ref = report("refined", 32.0, 1.0 / 64)
print("refinement: prop2", ref["E"], "<=", base["E"], ref["E"] <= base["E"])
print("refinement: prop1", ref["p1"], "<=", base["p1"], ref["p1"] <= base["p1"])
