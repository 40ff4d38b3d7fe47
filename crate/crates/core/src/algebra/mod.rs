//! Finite ordered monoids, morphisms from words, and the syntactic
//! construction.

mod dump;
mod monoid;
mod morphism;

pub use dump::MonoidDump;
pub use monoid::{monoid_exponent, omega_power, Element, FiniteMonoid, OrderRelation};
pub use morphism::{
    image_with_content, language_from_regex, product_morphism, syntactic_morphism, syntactic_order, ContentMorphism,
    Morphism, ProductMorphism, RecognizedLanguage, DEFAULT_MONOID_CAP,
};
