"""CLI experiment recipes, one subcommand each"""
from rmt_lab.experiments.combinatorial import FreenessExperiment, HarerZagierExperiment, MomentsExperiment
from rmt_lab.experiments.edge import BdjExperiment, EdgeMonteCarloExperiment, TracyWidomExperiment
from rmt_lab.experiments.paths import DysonExperiment, GesselViennotExperiment, KarlinMcGregorExperiment
from rmt_lab.experiments.rsk import RskExperiment
from rmt_lab.experiments.spectra import CircularExperiment, DensityExperiment, EsdExperiment, SampleExperiment
from rmt_lab.experiments.transforms import StieltjesExperiment

# Order of the subcommands in --help
ALL_EXPERIMENTS = [
    SampleExperiment,
    EsdExperiment,
    DensityExperiment,
    MomentsExperiment,
    StieltjesExperiment,
    HarerZagierExperiment,
    TracyWidomExperiment,
    EdgeMonteCarloExperiment,
    DysonExperiment,
    KarlinMcGregorExperiment,
    GesselViennotExperiment,
    RskExperiment,
    BdjExperiment,
    CircularExperiment,
    FreenessExperiment,
]

__all__ = ["ALL_EXPERIMENTS"] + [cls.__name__ for cls in ALL_EXPERIMENTS]
