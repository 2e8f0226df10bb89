"""
Capacity against list length
============================

With the average cell length fixed at 100 bits, capacity grows with the
number of rows. The figure is written to ``capacity_curve.png`` when
matplotlib is installed; the CSV is printed either way.
"""

from permsteg import capacity_corollary, capacity_prop1
from permsteg.capacity import curve_to_csv
from permsteg.experiments import figure1_curve

curve = figure1_curve()
print(curve_to_csv(curve[::10]))

for n in (100, 1000):
    print(n, round(capacity_prop1(n, 3, 100), 3), round(capacity_corollary(n, 3, 100), 3))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    ns, values = zip(*curve)
    fig, ax = plt.subplots()
    ax.plot(ns, values)
    ax.set_xlabel("rows n")
    ax.set_ylabel("capacity (%)")
    ax.set_title("3 columns, l = 100 bits")
    fig.savefig("capacity_curve.png", dpi=100)
