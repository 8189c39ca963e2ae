from .cache import Bundle, BundleCache
from .conjectures import ConjectureReport, Summary, Sweeper, check_conjectures
from .enumerate import enumerate_labeled_graphs, graph_from_mask, random_graphs
from .report import CSV_COLUMNS, emit_report
from .suite import SuiteSummary, run_construction_suite
