# A desk-scale accuracy table and a timing fit, the same runs the CLI performs.
# Run: python demos/05_benchmark.py   (about a minute)
# CLI equivalent: linewl bench --recipe srg --k 3 4 --depth 0 1

from linewl.bench import BenchConfig, run_bench, run_timing

# %% accuracy per (category, k, depth); 4-WL runs on the root graphs only
result = run_bench(BenchConfig(ks=[1, 3, 4], depths=[0, 1], recipe="srg", controls=True))
print(f"{'category':18s} {'k':>2s} {'depth':>5s} {'pairs':>5s} {'acc':>6s}  control")
for row in result.summary:
    print(f"{row['category']:18s} {row['k']:2d} {row['depth']:5d} {row['pairs']:5d} {row['accuracy']:6.0%}  {row['control']}")
print("isomorphic controls ever distinguished:", len(result.control_violations()))

# %% wall time grows polynomially in n; the slope estimates the exponent
report = run_timing(BenchConfig(ks=[2, 3], depths=[0, 1], recipe="scaling"))
for f in report["fits"]:
    print(f"k={f['k']} depth={f['depth']}: log-log slope {f['slope']:.2f} over {f['points']} pairs")
