default_scope = 'matnormdiag'

# None: MATNORM_DIAG_THREADS, else the CPU count
parallelism = None

flipflop_cfg = dict(
    tolerance=1e-8, max_iterations=100, init_row_cov='identity')

# 'nominal' (n / N, last point exactly 1) or 'n_plus_one' (n / (N + 1))
plotting_position = 'nominal'

formats = ['csv', 'svg']
svg_style = dict(
    width=480,
    height=480,
    margin=0.12,
    point_radius=2.0,
    point_color='black',
    line_color='red')
