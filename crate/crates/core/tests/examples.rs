macro_rules! example_test {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(boundary_region, "boundary_region.rs");
example_test!(membership, "membership.rs");
example_test!(normal_oracle, "normal_oracle.rs");
example_test!(riccati, "riccati.rs");
example_test!(helly_witness, "helly_witness.rs");
example_test!(isometry_synthesis, "isometry_synthesis.rs");
example_test!(counterexample, "counterexample.rs");
example_test!(export_files, "export_files.rs");
