fn main() {
    std::process::exit(parakit::app::main());
}
