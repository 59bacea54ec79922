"""Run the full law-verification campaign and the hypothesis ablations.

Every law in the catalog is checked by exhaustive exact-arithmetic scans over
the default instance matrix.  The ablations then drop one hypothesis at a
time and confirm that the predicted violation actually appears.

Run:  python demos/03_law_campaign.py
"""

from collections import Counter

from fuzzaut import Campaign, STATEMENTS, ablation, default_campaign, run_campaign

print("== default campaign ==")
results = run_campaign(default_campaign())
by_statement = Counter(r.statement for r in results)
failures = [r for r in results if not r.verdict]
width = max(len(s) for s in STATEMENTS)
for statement, description in STATEMENTS.items():
    n = by_statement[statement]
    print(f"  {statement:<{width}}  {n:3d} instances  {description}")
print(f"  -> {len(results)} rows, {len(failures)} failures")

print()
print("== ablation: drop pointedness ==")
for row in ablation(Campaign(groups=("Z2", "Z4", "S3")), "pointed"):
    mark = "expected failure recorded" if row.verdict else "no violation possible"
    print(f"  {row.instance}: {mark}")
    print(f"    {row.witness}")

print()
print("== ablation: drop normality ==")
for row in ablation(Campaign(groups=("S3", "D4")), "normal-mu"):
    print(f"  {row.instance}: counterexample found = {row.verdict}")
    print(f"    {row.witness}")
