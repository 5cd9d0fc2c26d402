"""Running the axiom harness: exhaustive models, sampled operators, and
fixtures that fail exactly where lattice theory says they must.

Every checker emits one report per law with counterexample witnesses that
replay through the same hooks. Finite carriers are enumerated; the
operator model is sampled from seeded bounded families.
"""

import numpy as np

from starorder import (
    CheckConfig,
    check_initial_segments_oml,
    check_quasi_orthomodular,
    check_riesz,
    matrix_structure,
    run_suite,
)
from starorder.axioms import format_report_table
from starorder.models import rv_structure
from starorder.poset import mo2, o6
from starorder.sampling import random_spectrum_hermitian

cfg = CheckConfig(seed=42, samples=150)

print("=== random variables, exhaustive (27 elements) ===")
print(format_report_table(run_suite(rv_structure(), "qom", cfg)))

print("\n=== operator model, sampled (dim 4) ===")
print(format_report_table(check_quasi_orthomodular(matrix_structure(dim=4), cfg)))

print("\n=== O6, the standard non-orthomodular hexagon ===")
print(format_report_table(check_quasi_orthomodular(o6().as_structure(), cfg)))

print("\n=== MO2 fails Riesz and distributivity together ===")
print(format_report_table(check_riesz(mo2().as_structure(), cfg)))

print("\n=== orthomodular laws inside operator segments [O, B] ===")
rng = np.random.default_rng(3)
tops = [random_spectrum_hermitian(rng, 4) for _ in range(3)]
print(format_report_table(check_initial_segments_oml(matrix_structure(dim=4), tops, cfg)))

print("\n=== and the O6 segment fails the orthomodular law, replayably ===")
reports = {r.axiom: r for r in check_initial_segments_oml(o6().as_structure(), ["1"], cfg)}
bad = reports["oml-orthomodular"]
witness = bad.witnesses[0]
print("witness:", bad.witness_desc[0], "-> replay says law holds?", bad.replay(witness))
