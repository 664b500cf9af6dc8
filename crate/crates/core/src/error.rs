use thiserror::Error;

/// Errors shared by the braid, map and Nielsen layers.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A projection or factorization was asked of a braid with a sigma factor.
    #[error("braid is not pure (sigma exponent is 1)")]
    NotPure,

    /// The descriptor does not satisfy alpha beta alpha = beta.
    #[error("descriptor is not a homomorphism: alpha beta alpha != beta")]
    InvalidMap,

    /// Both braids of the descriptor are pure, so the map splits.
    #[error("descriptor is split (both braids are pure)")]
    SplitMap,

    /// A fixture family was asked for an even z.
    #[error("fixture parameter z must be odd")]
    BadParity,

    /// The torus coincidence formula does not cover type-2 homomorphisms.
    #[error("no coincidence formula for torus homomorphisms of type 2")]
    UnsupportedType,

    /// A Klein-bottle coincidence argument does not send a to a power of alpha.
    #[error("homomorphism is not of the form a -> alpha^r required by the coincidence formula")]
    UnsupportedForm,

    /// The generator images do not commute, so they define no torus homomorphism.
    #[error("generator images do not match any torus homomorphism type")]
    Unclassifiable,
}
