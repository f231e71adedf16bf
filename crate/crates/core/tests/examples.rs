//! Every example runs to completion.

macro_rules! example {
    ($test:ident, $module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect("example runs");
        }
    };
}

example!(vertex_cuts_runs, vertex_cuts, "vertex_cuts.rs");
example!(minimalize_runs, minimalize, "minimalize.rs");
example!(characterizations_run, characterizations, "characterizations.rs");
example!(representation_runs, representation, "representation.rs");
example!(interconnect_runs, interconnect, "interconnect.rs");
example!(extremal_families_run, extremal_families, "extremal_families.rs");
example!(oracle_runs, oracle, "oracle.rs");
example!(documents_run, documents, "documents.rs");
example!(acceptance_table_runs, acceptance_table, "acceptance_table.rs");
