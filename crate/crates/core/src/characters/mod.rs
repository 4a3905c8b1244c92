//! Characters of symmetric and alternating groups.

mod alt;
pub mod cache;
mod inner;
mod mn;
mod split;

pub use alt::{
    alt_char, alt_classes, alt_group_order, alt_irreps, epsilon_and_product, split_class_of_power,
    AltClass, AltIrrep, SplitTag,
};
pub use inner::{alt_character, alt_inner_product, character, inner_product, AltClassFunction, ClassFunction};
pub use mn::{cache_clear, cache_entries, cache_extend, cache_len, chi, chi_with, dimension, PartChoice};
pub use split::SplitValue;
