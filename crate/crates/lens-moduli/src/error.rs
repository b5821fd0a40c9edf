use core::fmt;

/// Everything that can go wrong across the crate.
///
/// Verdicts ("this moduli space is empty", "this congruence fails") are never
/// errors; errors mark inputs that violate a documented precondition or data
/// that is internally inconsistent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// The claimed modulus is not a prime in `[2, 2^31)`.
    NotPrime(i64),
    /// `q` outside `{1, ..., p-1}`.
    QOutOfRange { p: i64, q: i64 },
    /// Inverse of the zero residue requested.
    ZeroInverse,
    /// Zero residue where a unit is required.
    ZeroInput,
    /// Zero rotation number `m` in a Laurent-exponent test.
    ZeroM,
    /// Two residues or lens spaces over different primes were combined.
    ModulusMismatch { left: i64, right: i64 },
    /// Operation requires `1 < q < p-1`.
    NotStandardRange { p: i64, q: i64 },
    /// Orbit core not admissible for this operation.
    WrongCore,
    /// Orbit ambient space not admissible for this operation.
    WrongAmbient,
    /// Orbit multiplicity must be a positive integer.
    NonPositiveMultiplicity(i64),
    /// Non-contractible orbit with multiplicity divisible by `p`.
    DegenerateOrbit { k: i64, p: i64 },
    /// Non-contractible quotient end with `k ≡ 0 (mod p)` has no orbit-space dimension.
    DegenerateNonContractible { k: i64, p: i64 },
    /// A moduli problem needs at least one positive end.
    MissingPositiveEnd,
    /// The lifting scheme needs at least two non-contractible ends.
    TooFewNonContractibleEnds { found: usize },
    /// Ramification data fails the divisibility or positivity constraints.
    InconsistentRamification,
    /// An index formula produced a half-integer where an integer is required.
    HalfIntegerResult,
    /// Asymptotic data for which the index formula is not integral.
    NonIntegralIndex,
    /// Rational map data violating `m·r ≡ 1 - q (mod p)` or the range of `r`.
    CongruenceViolation,
    /// Repeated, zero, or shared roots in the factor lists of a rational map.
    DegenerateFactors(&'static str),
    /// Adjunction defect negative: no simple curve realizes these multiplicities.
    AdjunctionViolation { two_delta: i64 },
    /// Adjunction defect odd (impossible for integral homology data).
    ParityViolation { two_delta: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in [2, 2^31)"),
            Error::QOutOfRange { p, q } => write!(f, "q = {q} outside 0 < q < p = {p}"),
            Error::ZeroInverse => write!(f, "zero residue has no inverse"),
            Error::ZeroInput => write!(f, "zero residue is not a unit"),
            Error::ZeroM => write!(f, "rotation number m must be nonzero"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::NotStandardRange { p, q } => {
                write!(f, "L({p},{q}) outside the standard range 1 < q < p-1")
            }
            Error::WrongCore => write!(f, "orbit core not admissible here"),
            Error::WrongAmbient => write!(f, "orbit ambient space not admissible here"),
            Error::NonPositiveMultiplicity(k) => {
                write!(f, "orbit multiplicity must be >= 1, got {k}")
            }
            Error::DegenerateOrbit { k, p } => {
                write!(f, "orbit multiplicity {k} ≡ 0 (mod {p}): degenerate orbit")
            }
            Error::DegenerateNonContractible { k, p } => {
                write!(
                    f,
                    "non-contractible end with {k} ≡ 0 (mod {p}) is degenerate"
                )
            }
            Error::MissingPositiveEnd => write!(f, "a holomorphic curve needs a positive end"),
            Error::TooFewNonContractibleEnds { found } => {
                write!(f, "lifting needs >= 2 non-contractible ends, found {found}")
            }
            Error::InconsistentRamification => write!(f, "inconsistent ramification data"),
            Error::HalfIntegerResult => write!(f, "index formula produced a half-integer"),
            Error::NonIntegralIndex => {
                write!(f, "non-integral index: asymptotic data is inconsistent")
            }
            Error::CongruenceViolation => {
                write!(f, "map data violates m·r ≡ 1 - q (mod p) or the range of r")
            }
            Error::DegenerateFactors(what) => write!(f, "degenerate factor data: {what}"),
            Error::AdjunctionViolation { two_delta } => {
                write!(
                    f,
                    "adjunction violated (2δ = {two_delta} < 0): not a simple curve"
                )
            }
            Error::ParityViolation { two_delta } => {
                write!(f, "adjunction defect 2δ = {two_delta} is odd")
            }
        }
    }
}

impl core::error::Error for Error {}
