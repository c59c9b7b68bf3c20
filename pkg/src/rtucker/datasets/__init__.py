"""Test tensors, file formats and Tucker archives."""
from .archive import TuckerManifest, load_tucker, read_manifest, save_tucker
from .dense import read_dense
from .generators import gen_hilbert, gen_synthetic_sparse
from .tns import read_tns, write_tns
from .transforms import condense_mode, subsample

__all__ = [
    "TuckerManifest",
    "condense_mode",
    "gen_hilbert",
    "gen_synthetic_sparse",
    "load_tucker",
    "read_dense",
    "read_manifest",
    "read_tns",
    "save_tucker",
    "subsample",
    "write_tns",
]
