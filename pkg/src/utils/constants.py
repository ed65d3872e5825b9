"""Shared constants: physics, node/link labels and output schemas."""

# Speed of light in vacuum (m/s)
SPEED_OF_LIGHT = 299_792_458.0

# Node labels
NODE_ALICE = 'a'
NODE_BOB = 'b'
NODE_EVE = 'e'

# Directed links (transmitter, receiver)
LINK_AB = 'ab'
LINK_BA = 'ba'
LINK_AE = 'ae'
LINK_EA = 'ea'
LINK_BE = 'be'
LINK_EB = 'eb'

# Stable integer ids used to derive random sub-streams (never renumber)
LINK_STREAM_IDS = {
    LINK_AB: 1,
    LINK_BA: 2,
    LINK_AE: 3,
    LINK_EA: 4,
    LINK_BE: 5,
    LINK_EB: 6,
}
PILOT_STREAM_IDS = {
    NODE_ALICE: 11,
    NODE_BOB: 12,
}
STREAM_TAG_DURATION = 101
STREAM_TAG_HIERARCHICAL = 202

# Receivers reported per key duration
RECEIVER_BOB = 'bob'
RECEIVER_ALICE = 'alice'
RECEIVER_EVE_FROM_A = 'eve_from_a'
RECEIVER_EVE_FROM_B = 'eve_from_b'
RECEIVERS = (RECEIVER_ALICE, RECEIVER_BOB, RECEIVER_EVE_FROM_A, RECEIVER_EVE_FROM_B)

# CSV column schemas (order is part of the output format)
FIG4_COLUMNS = ('N', 'node', 'bin_left', 'bin_right', 'mass', 'D')
FIG4_KS_COLUMNS = ('N', 'pair', 'ks_statistic', 'p_value', 'D')
FIG5_COLUMNS = ('N', 'theta_ab', 'mse_ab', 'mse_ba', 'mse_ae', 'mse_be', 'D')
FIG6_COLUMNS = ('N', 'gamma', 'kdr_theory', 'kdr_sim', 'stderr', 'D', 'M')
KEYRATES_COLUMNS = (
    'N', 'gamma',
    'kdr_ab', 'stderr_ab',
    'kdr_b_ea', 'stderr_b_ea',
    'kdr_a_eb', 'stderr_a_eb',
    'D',
)
SINGLE_RUN_COLUMNS = (
    'duration_index', 'delta',
    'theta_hat_ab', 'theta_hat_ba', 'theta_hat_ae', 'theta_hat_be',
    'q_b', 'q_a', 'q_e_from_a', 'q_e_from_b',
    'key_b', 'key_a', 'key_e_from_a', 'key_e_from_b',
)
SELFTEST_COLUMNS = ('check', 'passed', 'detail')
