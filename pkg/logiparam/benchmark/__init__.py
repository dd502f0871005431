from logiparam.benchmark.dataset import domain_histogram, load_dataset
from logiparam.benchmark.evaluate import evaluate
from logiparam.benchmark.metrics import CSV_COLUMNS, MetricsCell, MetricsTable
from logiparam.benchmark.report import emit_report, read_case_log, write_case_log
