"""Randomized property verification."""

from qt_screening.verify.runner import SampleOutcome, SuiteRunner, run_sample
from qt_screening.verify.sampling import Sampler, sample_seed
from qt_screening.verify.suites import SUITES, get_suite, suite_names
from qt_screening.verify.tracker import Prop4Tracker, PropertyTracker

__all__ = [
    "Prop4Tracker",
    "PropertyTracker",
    "SUITES",
    "SampleOutcome",
    "Sampler",
    "SuiteRunner",
    "get_suite",
    "run_sample",
    "sample_seed",
    "suite_names",
]
