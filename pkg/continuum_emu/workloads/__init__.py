"""Workload generators: K-Means iterations, staged pipelines and task ensembles."""
from .ensemble import ensemble_workload
from .kmeans import KMeansSpec, calibrate_throughput, kmeans_workload
from .pipeline import StageProfile, pipeline_workload

__all__ = [
    "KMeansSpec",
    "StageProfile",
    "calibrate_throughput",
    "ensemble_workload",
    "kmeans_workload",
    "pipeline_workload",
]
