_base_ = [
    '../_base_/default_runtime.py', '../_base_/alignment_thresholds.py'
]

# N > d, N close to d and N < d, each against both generators. The
# strict_mvn draws above cr = 2500 use a sum of two Kronecker terms.
scenarios = [
    dict(
        name='matnormal_c2_r2',
        generator='matnormal',
        n_samples=1000,
        n_rows=2,
        n_cols=2,
        seed=1001),
    dict(
        name='strict_mvn_c2_r2',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=2,
        n_cols=2,
        seed=1002),
    dict(
        name='matnormal_c30_r30',
        generator='matnormal',
        n_samples=1000,
        n_rows=30,
        n_cols=30,
        seed=1003),
    dict(
        name='strict_mvn_c30_r30',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=30,
        n_cols=30,
        seed=1004),
    dict(
        name='matnormal_c40_r40',
        generator='matnormal',
        n_samples=1000,
        n_rows=40,
        n_cols=40,
        seed=1005),
    dict(
        name='strict_mvn_c40_r40',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=40,
        n_cols=40,
        seed=1006),
    dict(
        name='matnormal_c100_r100',
        generator='matnormal',
        n_samples=1000,
        n_rows=100,
        n_cols=100,
        seed=1007),
    dict(
        name='strict_mvn_c100_r100',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=100,
        n_cols=100,
        seed=1008),
    dict(
        name='matnormal_c200_r200',
        generator='matnormal',
        n_samples=1000,
        n_rows=200,
        n_cols=200,
        seed=1009),
    dict(
        name='strict_mvn_c200_r200',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=200,
        n_cols=200,
        seed=1010),
]
