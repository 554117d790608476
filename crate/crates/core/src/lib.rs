pub mod cli;
pub mod cosetfun;
pub mod cyclotomic;
pub mod groupspec;
pub mod partitions;
pub mod permwreath;
pub mod twistmult;
pub mod unipotent;
pub mod verify;
