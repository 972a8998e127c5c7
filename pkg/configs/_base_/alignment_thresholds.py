# Pilot-calibrated bounds on AlignmentStats. Bump the version whenever a
# bound changes so stored results stay comparable.
thresholds_version = 1

# upper bounds for a series that follows the reference line
alignment_thresholds = dict(
    mhealy=dict(max_abs_dev=0.06),
    healy_type=dict(max_abs_dev=0.06),
    dd=dict(mean_abs_dev=0.05),
)

# lower bounds for a series that visibly departs from it
misalignment_floor = dict(healy_type=dict(max_abs_dev=0.15))

# strict_mvn over matnormal ratio of the MHealy max_abs_dev
discrimination_factor = 3.0
