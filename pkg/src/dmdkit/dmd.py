"""Best-fit linear propagator for snapshot sequences and its modal analysis.

Given snapshots x_0 .. x_{m-1} sampled every dt, the operator A minimizing
||X' - A X||_F over the staggered matrices

    X  = [x_0 ... x_{m-2}],    X' = [x_1 ... x_{m-1}]

is A = X' X+ with X+ the Moore-Penrose pseudoinverse. Its eigenpairs
(lambda_k, phi_k) give continuous-time frequencies w_k = ln(lambda_k)/dt
under the principal branch, and the state evolves as

    x(t) = sum_k phi_k b_k exp(w_k t),

where b solves Phi b = x_0 in the least-squares sense. The mean square of
the modal coordinate q_k(t) = b_k exp(w_k t) over a window ranks modes by
how much of the trajectory they carry.

The pseudoinverse is applied to the snapshot matrix directly; no
projection onto a reduced basis is performed, so the propagator acts on
the full channel space.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError, DmdkitWarning, NumericalError
from .timeseries import TimeSeriesFrame

DEFAULT_RCOND = 1e-12

#: |lambda| below this makes ln(lambda) meaningless in double precision.
LAMBDA_LOG_FLOOR = 1e-14

#: Conjugate eigenvalues are matched within this absolute tolerance.
CONJUGATE_TOL = 1e-10

_EIGENPAIR_RTOL = 1e-8
_AMPLITUDE_RESIDUAL_WARN = 1e-6
_UNUSABLE_PARTICIPATION_LIMIT = 1e-6


@dataclass(frozen=True)
class SnapshotPair:
    """The staggered snapshot matrices X (n x m-1) and Xp, one step apart."""

    X: np.ndarray
    Xp: np.ndarray
    dt: float

    def __post_init__(self):
        X = np.asarray(self.X, dtype=float)
        Xp = np.asarray(self.Xp, dtype=float)
        if X.ndim != 2 or X.shape != Xp.shape:
            raise DataError(
                f"X and Xp must be 2-D with identical shape, got "
                f"{X.shape} and {Xp.shape}"
            )
        if X.shape[1] < 2:
            raise DataError("need at least 2 snapshot columns")
        if not float(self.dt) > 0:
            raise DataError(f"dt must be positive, got {self.dt}")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Xp", Xp)
        object.__setattr__(self, "dt", float(self.dt))

    @property
    def n_channels(self) -> int:
        return self.X.shape[0]

    @property
    def n_snapshots(self) -> int:
        """Number of snapshots the pair was built from (columns + 1)."""
        return self.X.shape[1] + 1


@dataclass(frozen=True)
class DmdModel:
    """Fitted propagator with eigenstructure and expansion coefficients.

    Eigenvectors are columns of Phi, normalized to unit Euclidean length
    with the phase fixed so each column's largest-magnitude component is
    real and positive. Modes whose eigenvalue magnitude is below
    ``LAMBDA_LOG_FLOOR`` have no meaningful continuous frequency; they are
    marked unusable and skipped in reconstruction.
    """

    A: np.ndarray
    lambdas: np.ndarray
    omegas: np.ndarray
    omega_usable: np.ndarray
    Phi: np.ndarray
    b: np.ndarray
    dt: float
    channel_names: tuple[str, ...]
    x0: np.ndarray
    fit_residual: float
    b_residual: float
    n_snapshots: int = field(default=0)

    @property
    def n(self) -> int:
        return self.A.shape[0]


def build_snapshots(frame: TimeSeriesFrame) -> SnapshotPair:
    """Arrange a frame's rows into the staggered snapshot matrices.

    Column j of X is row j of the frame transposed; Xp is shifted by one
    row. Requires at least 3 rows.
    """
    if frame.n_steps < 3:
        raise DataError(
            f"need at least 3 snapshots to fit a propagator, got "
            f"{frame.n_steps}"
        )
    data = frame.values.T
    return SnapshotPair(X=data[:, :-1], Xp=data[:, 1:], dt=frame.dt)


def pseudoinverse(M: np.ndarray, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    """Moore-Penrose pseudoinverse with a relative singular-value cutoff.

    Singular values below ``rcond`` times the largest are treated as
    zero, so rank deficiency truncates instead of amplifying noise.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.size == 0:
        raise DataError(f"pseudoinverse needs a nonempty matrix, got shape {M.shape}")
    return np.linalg.pinv(M, rcond=rcond)


def amplitudes(Phi: np.ndarray, x0: np.ndarray) -> tuple[np.ndarray, float]:
    """Coordinates of x0 in the eigenvector basis, by least squares.

    Returns ``(b, residual)`` where residual is ||Phi b - x0|| / ||x0||
    (zero when x0 is zero). Coincides with solving Phi b = x0 exactly
    whenever Phi is invertible; a singular Phi degrades to the
    minimum-norm solution with a warning.
    """
    Phi = np.asarray(Phi)
    x0 = np.asarray(x0)
    if Phi.ndim != 2 or Phi.shape[0] != Phi.shape[1]:
        raise DataError(f"Phi must be square, got {Phi.shape}")
    if x0.shape != (Phi.shape[0],):
        raise DataError(
            f"x0 length {x0.shape} does not match Phi of order {Phi.shape[0]}"
        )
    b, _, rank, _ = np.linalg.lstsq(Phi, x0.astype(complex), rcond=None)
    norm_x0 = np.linalg.norm(x0)
    residual = 0.0
    if norm_x0 > 0:
        residual = float(np.linalg.norm(Phi @ b - x0) / norm_x0)
    if rank < Phi.shape[0]:
        warnings.warn(
            f"eigenvector matrix is rank deficient ({rank}/{Phi.shape[0]}); "
            "amplitudes use the minimum-norm solution",
            DmdkitWarning,
            stacklevel=2,
        )
    if residual > _AMPLITUDE_RESIDUAL_WARN:
        warnings.warn(
            f"initial condition is poorly represented by the eigenbasis "
            f"(relative residual {residual:.3e})",
            DmdkitWarning,
            stacklevel=2,
        )
    return b, residual


def _normalize_eigenvectors(Phi: np.ndarray) -> np.ndarray:
    """Unit 2-norm columns, phase fixed so the largest component is real > 0."""
    Phi = Phi.astype(complex, copy=True)
    for k in range(Phi.shape[1]):
        col = Phi[:, k]
        norm = np.linalg.norm(col)
        if norm == 0:
            raise NumericalError(f"eigenvector {k} is identically zero")
        col = col / norm
        j = int(np.argmax(np.abs(col)))
        phase = col[j] / abs(col[j])
        Phi[:, k] = col / phase
    return Phi


def fit(
    snap: SnapshotPair,
    rcond: float = DEFAULT_RCOND,
    channel_names: tuple[str, ...] = (),
) -> DmdModel:
    """Fit the least-squares propagator and decompose it.

    Steps: A = Xp X+, eigendecomposition of A, principal-branch log for
    the continuous frequencies, and a least-squares solve for the modal
    amplitudes from the first snapshot.
    """
    n, cols = snap.X.shape
    if n > cols:
        warnings.warn(
            f"fit is under-determined: {n} channels but only {cols} "
            "snapshot columns",
            DmdkitWarning,
            stacklevel=2,
        )
    A = snap.Xp @ pseudoinverse(snap.X, rcond=rcond)
    norm_Xp = np.linalg.norm(snap.Xp)
    fit_residual = 0.0
    if norm_Xp > 0:
        fit_residual = float(np.linalg.norm(snap.Xp - A @ snap.X) / norm_Xp)

    try:
        lambdas, Phi_raw = np.linalg.eig(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    # eig returns real arrays for all-real spectra; the principal-branch
    # log of a negative real eigenvalue still needs complex arithmetic
    lambdas = lambdas.astype(complex)
    Phi = _normalize_eigenvectors(Phi_raw)

    norm_A = np.linalg.norm(A)
    pair_res = np.linalg.norm(A @ Phi - Phi * lambdas, axis=0)
    worst = int(np.argmax(pair_res))
    if norm_A > 0 and pair_res[worst] > _EIGENPAIR_RTOL * norm_A:
        cond_phi = np.linalg.cond(Phi)
        raise NumericalError(
            f"eigenpair {worst} residual {pair_res[worst]:.3e} exceeds "
            f"{_EIGENPAIR_RTOL:.0e} * ||A||_F = {_EIGENPAIR_RTOL * norm_A:.3e} "
            f"(propagator may be defective; cond(Phi) = {cond_phi:.3e})"
        )

    usable = np.abs(lambdas) >= LAMBDA_LOG_FLOOR
    omegas = np.full(n, np.nan + 1j * np.nan, dtype=complex)
    omegas[usable] = np.log(lambdas[usable]) / snap.dt
    if not usable.all():
        warnings.warn(
            f"{int((~usable).sum())} modes have |lambda| < "
            f"{LAMBDA_LOG_FLOOR:.0e}; their continuous frequencies are "
            "undefined and they are excluded from reconstruction",
            DmdkitWarning,
            stacklevel=2,
        )

    x0 = snap.X[:, 0].copy()
    b, b_residual = amplitudes(Phi, x0)

    return DmdModel(
        A=A,
        lambdas=lambdas,
        omegas=omegas,
        omega_usable=usable,
        Phi=Phi,
        b=b,
        dt=snap.dt,
        channel_names=tuple(channel_names),
        x0=x0,
        fit_residual=fit_residual,
        b_residual=b_residual,
        n_snapshots=snap.n_snapshots,
    )


def fit_frame(frame: TimeSeriesFrame, rcond: float = DEFAULT_RCOND) -> DmdModel:
    """Convenience wrapper: build snapshots from a frame and fit."""
    return fit(
        build_snapshots(frame), rcond=rcond, channel_names=frame.channel_names
    )


def modal_participation(model: DmdModel, k_range=None) -> np.ndarray:
    """Mean square of each modal coordinate over the given snapshot indices.

    For mode k at snapshot index i the coordinate magnitude is
    |b_k| |lambda_k|^i (identical to |b_k exp(w_k i dt)| on the principal
    branch), so the participation only involves eigenvalue magnitudes and
    is well defined even for modes with no usable frequency.
    """
    idx = _resolve_range(model, k_range)
    mags = np.abs(model.lambdas)
    # powers via exp/log would lose |lambda| = 0; do it directly
    pow_table = mags[None, :] ** (2.0 * idx[:, None])
    return (np.abs(model.b) ** 2 * pow_table.mean(axis=0)).astype(float)


def _resolve_range(model: DmdModel, k_range) -> np.ndarray:
    if k_range is None:
        length = model.n_snapshots if model.n_snapshots > 0 else 1
        k_range = range(length)
    idx = np.asarray(list(k_range), dtype=float)
    if idx.size == 0:
        raise DataError("empty snapshot index range")
    if (idx < 0).any():
        raise DataError("snapshot indices must be non-negative")
    return idx


def reconstruct(model: DmdModel, k_range) -> TimeSeriesFrame:
    """Evaluate the modal expansion at the given snapshot indices.

    Index 0 corresponds to the first training snapshot (t = 0). Output is
    in the space the model was fitted in; mapping back to physical units
    is a separate, explicit step. Modes without a usable frequency are
    excluded, which is an error if they carry more than a trace of the
    training-window participation.
    """
    idx = _resolve_range(model, k_range)
    usable = model.omega_usable
    if not usable.all():
        part = modal_participation(model)
        total = part.sum()
        if total > 0 and part[~usable].sum() > _UNUSABLE_PARTICIPATION_LIMIT * total:
            raise NumericalError(
                "modes without a usable continuous frequency carry "
                f"{part[~usable].sum() / total:.3e} of total participation; "
                "reconstruction would be wrong"
            )

    lam = model.lambdas[usable]
    coeff = model.b[usable]
    Phi = model.Phi[:, usable]
    # lambda^k equals exp(w k dt) exactly for integer k on the principal branch
    states = (Phi * coeff) @ (lam[:, None] ** idx[None, :])
    values = states.T
    max_val = float(np.abs(values).max()) if values.size else 0.0
    max_imag = float(np.abs(values.imag).max()) if values.size else 0.0
    if max_val > 0 and max_imag > 1e-8 * max_val:
        warnings.warn(
            f"reconstruction has imaginary residue {max_imag:.3e} "
            f"(largest magnitude {max_val:.3e}); check conjugate symmetry",
            DmdkitWarning,
            stacklevel=2,
        )
    names = model.channel_names or tuple(
        f"ch{j}" for j in range(model.Phi.shape[0])
    )
    return TimeSeriesFrame(
        channel_names=names,
        t0=float(idx[0]) * model.dt,
        dt=model.dt,
        values=values.real,
    )


def forecast(model: DmdModel, horizon: int, train_len: int) -> TimeSeriesFrame:
    """Extrapolate the modal expansion past the training window.

    Returns the reconstruction over snapshot indices
    ``[train_len, train_len + horizon)``; t0 is set accordingly.
    """
    if horizon < 1:
        raise DataError(f"horizon must be >= 1, got {horizon}")
    if train_len < 0:
        raise DataError(f"train_len must be >= 0, got {train_len}")
    return reconstruct(model, range(train_len, train_len + horizon))


@dataclass(frozen=True)
class ModeRow:
    """One row of the modal table: spectral data plus participation."""

    index: int
    lam: complex
    omega: complex
    frequency_hz: float
    growth_rate: float
    amplitude: complex
    participation: float
    component_magnitudes: np.ndarray


@dataclass(frozen=True)
class ModeGroup:
    """A mode or a complex-conjugate pair, grouped for reporting."""

    member_indices: tuple[int, ...]
    lam: complex
    omega: complex
    frequency_hz: float
    growth_rate: float
    participation: float
    component_magnitudes: np.ndarray


def modal_table(model: DmdModel, k_range=None) -> list[ModeRow]:
    """Per-mode table sorted by descending participation."""
    part = modal_participation(model, k_range)
    rows = []
    for k in sorted(range(model.n), key=lambda k: (-part[k], k)):
        om = model.omegas[k]
        rows.append(
            ModeRow(
                index=k,
                lam=complex(model.lambdas[k]),
                omega=complex(om),
                frequency_hz=float(om.imag / (2.0 * np.pi)),
                growth_rate=float(om.real),
                amplitude=complex(model.b[k]),
                participation=float(part[k]),
                component_magnitudes=np.abs(model.Phi[:, k]),
            )
        )
    return rows


def mode_components(
    model: DmdModel, top_k: int, k_range=None
) -> list[ModeGroup]:
    """Most participating modes with conjugate partners merged.

    A pair is identified by eigenvalues matching each other's conjugate
    within ``CONJUGATE_TOL``; it counts once, with the participations of
    both members summed and the member with non-negative frequency used
    as representative.
    """
    if top_k < 0:
        raise DataError(f"top_k must be >= 0, got {top_k}")
    part = modal_participation(model, k_range)
    lam = model.lambdas
    consumed = np.zeros(model.n, dtype=bool)
    groups: list[tuple[float, ModeGroup]] = []
    for k in sorted(range(model.n), key=lambda k: (-part[k], k)):
        if consumed[k]:
            continue
        consumed[k] = True
        members = [k]
        if abs(lam[k].imag) > CONJUGATE_TOL:
            cands = [
                j
                for j in range(model.n)
                if not consumed[j] and abs(lam[j] - np.conj(lam[k])) <= CONJUGATE_TOL
            ]
            if cands:
                j = min(cands, key=lambda j: abs(lam[j] - np.conj(lam[k])))
                consumed[j] = True
                members.append(j)
        rep = max(members, key=lambda j: lam[j].imag)
        total = float(part[members].sum()) if len(members) > 1 else float(part[k])
        om = model.omegas[rep]
        groups.append(
            (
                total,
                ModeGroup(
                    member_indices=tuple(sorted(members)),
                    lam=complex(lam[rep]),
                    omega=complex(om),
                    frequency_hz=float(om.imag / (2.0 * np.pi)),
                    growth_rate=float(om.real),
                    participation=total,
                    component_magnitudes=np.abs(model.Phi[:, rep]),
                ),
            )
        )
    groups.sort(key=lambda g: -g[0])
    return [g for _, g in groups[:top_k]]
