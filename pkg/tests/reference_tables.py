"""Опубліковані значення для регіонів за 2020-03-16..2020-04-06"""

from datetime import date, timedelta

DATES = [date(2020, 3, 16) + timedelta(days=offset) for offset in range(22)]

# (P(T=1), P(R=1|T=1)) за датами
RATES = {
    'illinois': [
        ('0.000', '0.092'), ('0.000', '0.107'), ('0.000', '0.140'), ('0.000', '0.134'), ('0.000', '0.136'),
        ('0.000', '0.121'), ('0.001', '0.125'), ('0.001', '0.130'), ('0.001', '0.134'), ('0.001', '0.131'),
        ('0.001', '0.153'), ('0.002', '0.140'), ('0.002', '0.137'), ('0.002', '0.166'), ('0.002', '0.166'),
        ('0.003', '0.170'), ('0.003', '0.173'), ('0.003', '0.176'), ('0.004', '0.185'), ('0.004', '0.193'),
        ('0.005', '0.191'), ('0.005', '0.195'),
    ],
    'new_york': [
        ('0.001', '0.134'), ('0.001', '0.161'), ('0.001', '0.184'), ('0.002', '0.218'), ('0.002', '0.226'),
        ('0.003', '0.246'), ('0.004', '0.266'), ('0.005', '0.280'), ('0.005', '0.297'), ('0.006', '0.305'),
        ('0.007', '0.322'), ('0.008', '0.335'), ('0.009', '0.345'), ('0.010', '0.356'), ('0.011', '0.369'),
        ('0.011', '0.379'), ('0.012', '0.387'), ('0.013', '0.395'), ('0.015', '0.401'), ('0.016', '0.404'),
        ('0.016', '0.407'), ('0.017', '0.408'),
    ],
    'italy': [
        ('0.002', '0.203'), ('0.002', '0.212'), ('0.003', '0.216'), ('0.003', '0.225'), ('0.003', '0.227'),
        ('0.004', '0.230'), ('0.004', '0.229'), ('0.005', '0.232'), ('0.005', '0.233'), ('0.005', '0.229'),
        ('0.006', '0.223'), ('0.007', '0.219'), ('0.007', '0.215'), ('0.008', '0.215'), ('0.008', '0.213'),
        ('0.008', '0.209'), ('0.009', '0.204'), ('0.010', '0.198'), ('0.010', '0.193'), ('0.011', '0.190'),
        ('0.011', '0.186'), ('0.012', '0.184'),
    ],
}

# (P(H=1), P(U=1), P(D=1)) для Італії
ITALY_SEVERE_RATES = [
    ('0.00021', '0.00003', '0.00004'), ('0.00025', '0.00003', '0.00004'), ('0.00028', '0.00004', '0.00005'),
    ('0.00030', '0.00004', '0.00006'), ('0.00031', '0.00004', '0.00007'), ('0.00034', '0.00005', '0.00008'),
    ('0.00038', '0.00005', '0.00009'), ('0.00040', '0.00005', '0.00010'), ('0.00042', '0.00006', '0.00011'),
    ('0.00044', '0.00006', '0.00012'), ('0.00047', '0.00006', '0.00014'), ('0.00049', '0.00006', '0.00015'),
    ('0.00051', '0.00006', '0.00017'), ('0.00052', '0.00006', '0.00018'), ('0.00053', '0.00007', '0.00019'),
    ('0.00053', '0.00007', '0.00021'), ('0.00054', '0.00007', '0.00022'), ('0.00054', '0.00007', '0.00023'),
    ('0.00054', '0.00007', '0.00024'), ('0.00055', '0.00007', '0.00025'), ('0.00055', '0.00007', '0.00026'),
    ('0.00054', '0.00006', '0.00027'),
]

# межі обвідної на P(C_d=1), miss = [0.1, 0.4]
ENVELOPE = {
    'illinois': [
        (0.000, 0.455), (0.000, 0.464), (0.000, 0.472), (0.000, 0.472), (0.000, 0.472), (0.000, 0.472),
        (0.000, 0.475), (0.000, 0.478), (0.000, 0.479), (0.000, 0.479), (0.000, 0.482), (0.000, 0.482),
        (0.000, 0.482), (0.001, 0.499), (0.001, 0.500), (0.001, 0.502), (0.001, 0.504), (0.001, 0.506),
        (0.001, 0.511), (0.001, 0.515), (0.001, 0.515), (0.001, 0.517),
    ],
    'new_york': [
        (0.000, 0.480), (0.000, 0.497), (0.000, 0.511), (0.000, 0.531), (0.001, 0.536), (0.001, 0.547),
        (0.001, 0.559), (0.002, 0.568), (0.002, 0.578), (0.002, 0.583), (0.003, 0.593), (0.003, 0.601),
        (0.004, 0.607), (0.004, 0.614), (0.005, 0.622), (0.005, 0.627), (0.006, 0.632), (0.006, 0.637),
        (0.007, 0.641), (0.007, 0.642), (0.008, 0.644), (0.008, 0.645),
    ],
    'italy': [
        (0.001, 0.510), (0.001, 0.510), (0.001, 0.510), (0.001, 0.510), (0.001, 0.510), (0.001, 0.510),
        (0.001, 0.510), (0.001, 0.510), (0.002, 0.510), (0.002, 0.510), (0.002, 0.510), (0.002, 0.510),
        (0.002, 0.510), (0.002, 0.510), (0.002, 0.510), (0.002, 0.510), (0.003, 0.510), (0.003, 0.510),
        (0.003, 0.510), (0.003, 0.510), (0.003, 0.510), (0.003, 0.510),
    ],
}

# межі на P(V_d=1|C_d=1) для Італії: (H_lo, H_hi, U_lo, U_hi, D_lo, D_hi)
ITALY_SEVERE_BOUNDS = [
    (0.000, 0.330, 0.000, 0.047, 0.000, 0.055), (0.000, 0.346, 0.000, 0.048, 0.000, 0.058),
    (0.001, 0.341, 0.000, 0.046, 0.000, 0.061), (0.001, 0.331, 0.000, 0.045, 0.000, 0.062),
    (0.001, 0.296, 0.000, 0.042, 0.000, 0.064), (0.001, 0.287, 0.000, 0.040, 0.000, 0.067),
    (0.001, 0.289, 0.000, 0.038, 0.000, 0.069), (0.001, 0.281, 0.000, 0.038, 0.000, 0.071),
    (0.001, 0.275, 0.000, 0.037, 0.000, 0.074), (0.001, 0.268, 0.000, 0.035, 0.000, 0.075),
    (0.001, 0.261, 0.000, 0.033, 0.000, 0.075), (0.001, 0.254, 0.000, 0.032, 0.000, 0.078),
    (0.001, 0.242, 0.000, 0.031, 0.000, 0.079), (0.001, 0.235, 0.000, 0.029, 0.000, 0.081),
    (0.001, 0.228, 0.000, 0.029, 0.000, 0.083), (0.001, 0.221, 0.000, 0.028, 0.000, 0.085),
    (0.001, 0.211, 0.000, 0.026, 0.000, 0.086), (0.001, 0.201, 0.000, 0.025, 0.000, 0.086),
    (0.001, 0.193, 0.000, 0.024, 0.000, 0.086), (0.001, 0.186, 0.000, 0.022, 0.000, 0.086),
    (0.001, 0.178, 0.000, 0.021, 0.001, 0.086), (0.001, 0.172, 0.000, 0.020, 0.001, 0.086),
]
