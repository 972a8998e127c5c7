_base_ = ['./regimes_n1000.py']

# c = r = 200 downscaled to 60 so the suite fits a CI job
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
        name='matnormal_c60_r60',
        generator='matnormal',
        n_samples=1000,
        n_rows=60,
        n_cols=60,
        seed=1009),
    dict(
        name='strict_mvn_c60_r60',
        generator='strict_mvn',
        n_samples=1000,
        n_rows=60,
        n_cols=60,
        seed=1010),
]
