pub mod exactalg;
pub mod rootdata;
pub mod hecke;
pub mod plancherel;
pub mod blocks;
pub mod extquot;
