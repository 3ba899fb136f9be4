pub mod cli;
pub mod lab;
pub mod poly;
pub mod qarith;
pub mod qquadratic;
pub mod qmodular;
pub mod ratfn;
pub mod series;
