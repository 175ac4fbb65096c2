use thiserror::Error;

/// Domain violations and non-convergent parameter regimes. Each refusal
/// carries the offending input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be odd and positive, got {0}")]
    EvenModulus(u64),

    #[error("closed Gauss sum requires a reduced fraction; got a = {a}, b = {b}")]
    NotCoprime { a: u64, b: u64 },

    #[error("invalid reduced fraction a = {a}, b = {b}: need 0 <= a < b, gcd(a, b) = 1")]
    InvalidFraction { a: u64, b: u64 },

    #[error("product factor (1 - q^k)^e needs k >= 1")]
    InvalidProductFactor,

    #[error("zeta argument s = {s} out of domain (need s > 1)")]
    ZetaDomain { s: f64 },

    #[error("Hurwitz shift q = {q} out of domain (need 0 < q <= 1)")]
    HurwitzShiftDomain { q: f64 },

    #[error("D(s) has a simple pole at s = 1/2")]
    DirichletPole,

    #[error("D(s) diverges for s = {s} <= 1/2")]
    DirichletDomain { s: f64 },

    #[error("divisor-sum bound needs beta >= modulus and residue >= 1; got beta = {beta}, modulus = {modulus}, residue = {residue}")]
    DivisorBoundDomain { beta: u64, modulus: u64, residue: u64 },

    #[error("brute-force enumeration is capped at n <= {cap}, got n = {n}")]
    BruteForceCap { n: u64, cap: u64 },

    #[error("point q with |q| = {modulus} is outside the open unit disk")]
    OutsideUnitDisk { modulus: f64 },

    #[error("y = {y} below the supported radius floor {min}")]
    RadiusTooSmall { y: f64, min: f64 },

    #[error("tau = {re} + {im}i outside the wedge |Arg tau| <= pi/4")]
    OutsideWedge { re: f64, im: f64 },

    #[error("tau' must have positive real part, got Re = {re}")]
    NonpositiveRealPart { re: f64 },

    #[error("correction product has a non-contracting factor |g| = {magnitude} at (h = {h}, l = {l}, s = {s})")]
    DivergentFactor { h: u64, l: u64, s: u8, magnitude: f64 },

    #[error("correction product truncation cap {cap} exceeded at (h = {h}, s = {s})")]
    ProductCap { h: u64, s: u8, cap: u64 },

    #[error("grid point n = {n} exceeds the computed table (max n = {table_max})")]
    GridBeyondTable { n: u64, table_max: u64 },

    #[error("tau point requires y > 0, got y = {y}")]
    NonpositiveY { y: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
