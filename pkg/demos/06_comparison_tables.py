"""Comparison tables as a library call and on the command line.

The same tables come from the `shapeinv` command:
    shapeinv list
    shapeinv compute --family eckart --levels 3 --format csv
    shapeinv table2
    shapeinv verify
"""

import json

from shapeinv import report
from shapeinv.cli import cli_main

# Ground states of every family at its defaults, plus the Rosen-Morse II
# worked example as the last row.
print(report.emit(report.table2_rows(), "table",
                  columns=("family", "params", "e_exact", "e_wkb", "pct_err_wkb",
                           "e_ft", "pct_err_ft")))

# Several levels of a few families in CSV.  Numbers carry 17 significant
# digits, so they read back bit-exactly.
cfg = report.RunConfig(families=("morse", "eckart"), n_max=2, format="csv")
rows = report.run_comparison(cfg)
print(report.emit(rows, "csv"))

# JSON keeps the V_- scale energies and any notes.
print(json.dumps(json.loads(report.emit(rows[:1], "json"))[0], indent=1))

# The command-line front end.
print()
cli_main(["compute", "--family", "rosen_morse_2", "--set", "A=2", "--set", "B=1",
          "--set", "alpha=1", "--levels", "2", "--methods", "exact,wkb,ft"])
print()
cli_main(["verify"])
