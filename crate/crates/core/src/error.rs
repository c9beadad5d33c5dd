use core::fmt;

/// Errors shared by every layer of the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The ideal or submodule lattice of the object is infinite.
    InfiniteLattice,
    /// Element lists were requested for an infinite ring.
    InfiniteEnumeration,
    /// The quotient cannot be represented by a supported backend.
    InfiniteQuotient,
    /// Two operands live over different rings.
    RingMismatch,
    /// Two submodules have different parent modules.
    ParentMismatch,
    /// An element vector does not match the parent's generator count.
    ElementOutOfRange,
    /// Invariant factors are out of range for the ring.
    BadFactors,
    /// An enumeration bound was exceeded.
    BoundExceeded,
    /// A homomorphism matrix does not respect the source relations.
    NotWellDefined,
    /// The map is not an epimorphism.
    NotEpi,
    /// The given subset is not multiplicatively closed (or contains 0).
    NotMcs,
    /// T = 0 was passed where a nonzero reference submodule is required.
    ZeroT,
    /// The predicate is not decidable on this backend without a witness.
    Undecidable,
    /// The operation is not supported on this backend.
    UnsupportedBackend,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::InfiniteLattice => "lattice is infinite",
            Error::InfiniteEnumeration => "cannot enumerate elements of an infinite ring",
            Error::InfiniteQuotient => "quotient is not representable",
            Error::RingMismatch => "operands live over different rings",
            Error::ParentMismatch => "submodules have different parents",
            Error::ElementOutOfRange => "element does not lie in the module",
            Error::BadFactors => "invalid invariant factors",
            Error::BoundExceeded => "enumeration bound exceeded",
            Error::NotWellDefined => "matrix does not define a homomorphism",
            Error::NotEpi => "map is not an epimorphism",
            Error::NotMcs => "set is not multiplicatively closed without 0",
            Error::ZeroT => "reference submodule T must be nonzero here",
            Error::Undecidable => "undecidable on this backend (supply a witness)",
            Error::UnsupportedBackend => "operation not supported on this backend",
        };
        f.write_str(msg)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
