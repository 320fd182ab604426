#[allow(dead_code)]
mod gray_map {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gray_map.rs"));
}

#[allow(dead_code)]
mod standard_form {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/standard_form.rs"
    ));
}

#[allow(dead_code)]
mod plotkin_recursion {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/plotkin_recursion.rs"
    ));
}

#[allow(dead_code)]
mod verify_family {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verify_family.rs"
    ));
}

#[allow(dead_code)]
mod nonlinear_override {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/nonlinear_override.rs"
    ));
}

#[allow(dead_code)]
mod qrm_sizes {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/qrm_sizes.rs"
    ));
}

#[allow(dead_code)]
mod search {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/search.rs"));
}

#[allow(dead_code)]
mod file_format {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/file_format.rs"
    ));
}

#[allow(dead_code)]
mod reed_muller {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/reed_muller.rs"
    ));
}

#[test]
fn gray_map_runs() {
    gray_map::run_example().expect("gray_map example should run");
}

#[test]
fn standard_form_runs() {
    standard_form::run_example().expect("standard_form example should run");
}

#[test]
fn plotkin_recursion_runs() {
    plotkin_recursion::run_example().expect("plotkin_recursion example should run");
}

#[test]
fn verify_family_runs() {
    verify_family::run_example().expect("verify_family example should run");
}

#[test]
fn nonlinear_override_runs() {
    nonlinear_override::run_example().expect("nonlinear_override example should run");
}

#[test]
fn qrm_sizes_runs() {
    qrm_sizes::run_example().expect("qrm_sizes example should run");
}

#[test]
fn search_runs() {
    search::run_example().expect("search example should run");
}

#[test]
fn file_format_runs() {
    file_format::run_example().expect("file_format example should run");
}

#[test]
fn reed_muller_runs() {
    reed_muller::run_example().expect("reed_muller example should run");
}
