//! Every example runs to completion.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(euler_dimension, "../examples/euler_dimension.rs");
example!(smoothness, "../examples/smoothness.rs");
example!(walls, "../examples/walls.rs");
example!(oracle, "../examples/oracle.rs");
example!(stability, "../examples/stability.rs");
example!(random_battery, "../examples/random_battery.rs");
