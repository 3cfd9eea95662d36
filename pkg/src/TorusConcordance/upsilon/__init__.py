from .pl_function import PLFunction, add, scale, negate, eval_at
from .envelope import upsilon_torus, upsilon_by_minimization, lower_envelope, envelope_lines
from .knot_sum import TorusKnotSum, upsilon_of_sum, check_recursion, vanishing_combination
from .plot_write import write_pl_function, pl_function_to_json, pl_function_from_json, pl_function_to_csv, SvgWriter, FORMATS
