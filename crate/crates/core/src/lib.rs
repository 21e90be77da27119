pub mod annular;
pub mod cli;
pub mod cluster;
pub mod exactalg;
pub mod jacobian;
pub mod network;
pub mod toda;
