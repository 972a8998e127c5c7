_base_ = ['../_base_/default_runtime.py']

seed = 20240701
alpha = 0.05
replications = 500

# one entry per simulated design; strict_mvn rows are negative controls
calibrations = [
    dict(
        name='matnormal_c2_r2',
        generator='matnormal',
        n_samples=1000,
        n_rows=2,
        n_cols=2),
    dict(
        name='strict_mvn_c2_r2',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=2,
        n_cols=2),
    dict(
        name='matnormal_c30_r30',
        generator='matnormal',
        n_samples=1000,
        n_rows=30,
        n_cols=30),
    dict(
        name='strict_mvn_c30_r30',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=30,
        n_cols=30),
]
