from .compare_manager import CompareManager, CompareResult, SeriesSummary
from .rate_profile import RateProfileManager
from .report import Report, write_report
from .sources import ResolvedSource, resolve_source

__all__ = [
    "CompareManager",
    "CompareResult",
    "SeriesSummary",
    "RateProfileManager",
    "Report",
    "write_report",
    "ResolvedSource",
    "resolve_source",
]
