# coding: utf-8

# # Sweeping identities over parameter ranges

# The same machinery drives `polydedekind verify`. Each line carries its
# parameters and an exact report.

from polydedekind.sweeps import IDENTITY_NAMES, run_sweep

print(IDENTITY_NAMES)

lines = list(run_sweep("corollary11", {"h": range(1, 5), "m": range(1, 5), "p": [1, 3]}))
for line in lines[:6]:
    print(line.params, line.skipped or line.report.holds)


# Tally a whole default sweep.

lines = list(run_sweep("theorem10"))
checked = [l for l in lines if l.report is not None]
print(len(lines), len(checked), sum(l.failed for l in checked))


# A deliberately wrong Stirling entry is caught.

from polydedekind.classical import stirling1_table, stirling_override

bad = stirling1_table(3)[3, 2] + 1
with stirling_override({(3, 2): bad}):
    lines = list(run_sweep("theorem2", {"k": [1], "n": [3]}))
print([l.failed for l in lines])
