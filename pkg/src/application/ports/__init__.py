from .report_writer_port import ReportWriterPort
from .state_file_store_port import StateFileStorePort

__all__ = [
    "ReportWriterPort",
    "StateFileStorePort",
]
