pub mod exactnum;
pub mod ncalg;
pub mod rewrite;
pub mod report;
pub mod qperm;
pub mod groups;
pub mod gradings;
pub mod cli;
