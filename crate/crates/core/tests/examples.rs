//! Runs every example under `examples/` with its default arguments.

macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(basic_values, "basic_values.rs");
example!(arithmetic_tables, "arithmetic_tables.rs");
example!(divisor_sums, "divisor_sums.rs");
example!(generalized_inversion, "generalized_inversion.rs");
example!(power_sums, "power_sums.rs");
example!(conjecture_harness, "conjecture_harness.rs");
example!(prime_characterization, "prime_characterization.rs");
example!(generating_function, "generating_function.rs");
example!(dirichlet_series, "dirichlet_series.rs");

#[test]
fn examples_run() {
    basic_values::run_example().expect("basic_values");
    arithmetic_tables::run_example().expect("arithmetic_tables");
    divisor_sums::run_example().expect("divisor_sums");
    generalized_inversion::run_example().expect("generalized_inversion");
    power_sums::run_example().expect("power_sums");
    conjecture_harness::run_example().expect("conjecture_harness");
    prime_characterization::run_example().expect("prime_characterization");
    generating_function::run_example().expect("generating_function");
    dirichlet_series::run_example().expect("dirichlet_series");
}
