pub mod cli;
pub mod closure;
pub mod counting;
pub mod diagram;
pub mod error;
pub mod family;
pub mod monoid;
pub mod normal_form;
pub mod oeis;
pub mod partition;
pub mod presentation;
pub mod ramified;
pub mod render;
pub mod tag;
pub mod union_find;
pub mod word;
