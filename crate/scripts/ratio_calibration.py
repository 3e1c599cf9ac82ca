# Independent Monte Carlo calibration of Delta(f)/sqrt(l ln l) using numpy's RNG.
#
# Output of `python3 scripts/ratio_calibration.py` (n, trials, mean, sd):
#   8  4000 1.7851 0.2317
#   10 4000 1.8313 0.1816
#   12 2000 1.8568 0.1495
#   14 2000 1.8723 0.1326
import numpy as np, math, sys
rng = np.random.default_rng(20261017)
def fwht(a):
    a = a.copy(); h = 1; n = a.shape[-1]
    while h < n:
        a = a.reshape(a.shape[:-1] + (n // (2*h), 2, h))
        x = a[..., 0, :].copy(); y = a[..., 1, :].copy()
        a[..., 0, :] = x + y; a[..., 1, :] = x - y
        a = a.reshape(a.shape[:-3] + (n,)); h *= 2
    return a
for n, trials in [(8,4000),(10,4000),(12,2000),(14,2000)]:
    l = 2**n; rs=[]
    for b in range(0, trials, 100):
        f = rng.integers(0, 2, size=(100, l))
        s = (1 - 2*f).astype(np.int64)
        w = fwht(s); ac = fwht(w*w) // l
        d = np.abs(ac[:, 1:]).max(axis=1)
        rs.extend(d / math.sqrt(l*math.log(l)))
    rs = np.array(rs)
    print(n, trials, rs.mean(), rs.std(ddof=1))
