pub mod koszul;
pub mod poly;
pub mod profile;
