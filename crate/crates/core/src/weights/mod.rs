//! Exact infinitesimal characters, interlacing strings and their tableaux,
//! plus the two wall-crossing moves (`AB <-> BA` and `AABB <-> BBAA`).

mod half_int;
mod infchar;
mod multi;
mod string;
mod tableau;

pub use half_int::HalfInt;
pub use infchar::InfinitesimalCharacter;
pub use multi::MultiPlaceString;
pub use string::{enumerate_strings, interlace, string_count, InterlacingString, Symbol};
pub use tableau::{Cell, Tableau};
