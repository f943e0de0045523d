from doodlinv.invariants.moments import binom_falling, moment, strangeness, moments, kink_jump, \
    wall_coorientation, strangeness_jump, WallCoorientation
from doodlinv.invariants.characteristic import Evaluator, moment_evaluator, characteristic_number, \
    order_upper_test, top_symbol, OrderTestReport
