"""Finite k-graphs, their source-free extensions, and Cuntz-Krieger models."""
from .analysis import (BoundaryPath, CyclicPresentation, MinimalExtensionPair,
                       all_boundary_paths, enumerate_boundary_paths, flat,
                       flat_bruteforce, is_acyclic, is_exhaustive,
                       is_locally_convex, is_source, is_source_naive,
                       minimal_extensions)
from .ckmodel import (CKFamily, algebra_dimension, build_boundary_representation,
                      check_ck_relations)
from .core import (Edge, FactorizationError, NotComposable, Path, Presentation,
                   Square, compose, enumerate_leq, enumerate_paths, factor,
                   from_directed_graph, generate_omega, validate_presentation)
from .desing import (ExtPath, ExtVertex, canonicalize_path, canonicalize_vertex,
                     check_exhaustive_preserved, check_lambda_min_preserved,
                     compare_add_heads, enumerate_ext_paths, ext_compose,
                     ext_endpoints, ext_factor, ext_identity,
                     ext_minimal_extensions, iso_check_window, verify_axioms,
                     window_presentation, window_vertices)
from .demos import demo
from .dot import export_dot
from .kgfile import format_presentation, parse_presentation

__version__ = "0.1.0"
