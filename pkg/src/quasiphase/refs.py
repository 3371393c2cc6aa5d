"""Citation strings for the result catalog behind each pipeline stage.

Reports and domain diagnostics carry one of these strings so every stage of a
run can be audited against the numbered classification results the library
implements (see README, "Result catalog").
"""

EQ_SCALING = "Eq. (2) (quasi-homogeneous scaling law)"
EQ_PARTS = "Eqs. (3)-(4) (homogeneous parts)"
EQ_CHANGE = "Eq. (15) (power change of variables)"
COPRIMALITY = "coprimality assumption (no common factor)"
LEMMA_BLOWUP = "Lemma 1 (blow-up classification of characteristic directions)"
LEMMA_TANGENCY = "Lemma 2 (orbit count along the vertical direction)"
LEMMA_LINES_CENTER = "Lemma 3 (invariant lines / global-center integral)"
LEMMA_QUADRATIC = "Lemma 4 (canonical quadratic families)"
LEMMA_CUBIC = "Lemma 5 (canonical cubic families)"
LEMMA_REDUCE = "Lemma 6 (reduction to homogeneous form)"
LEMMA_SYMMETRY = "Lemma 7 (parity symmetry classes)"
REMARK_BETA = "Remark 1 (choice of the power change)"
REMARK_PARITY = "Remark 2 (weights never both even)"
REMARK_QUADRANT = "Remark 3 (half-plane restriction)"
REMARK_SWAP = "Remark 4 (x-y blow-up correspondence)"
THEOREM_H1_H0 = "Theorem 1 (quadratic reduction targets)"
THEOREM_H2 = "Theorem 2 (cubic reduction targets)"
PROP_H2_PORTRAITS = "Proposition 1 (portraits of the homogeneous quadratic form)"
THEOREM_3D = "Theorem 3 (portraits of the cubic product family)"
THEOREM_DEG2 = "Theorem 4 (global quadratic portraits)"
THEOREM_DEG3 = "Theorem 5 (global cubic portraits)"
COMPACTIFICATION = "Eqs. (9)-(14) (Poincare compactification charts)"
