pub mod bialg;
pub mod catlim;
pub mod exactla;
pub mod finmon;
pub mod harness;
pub mod hopfadj;
