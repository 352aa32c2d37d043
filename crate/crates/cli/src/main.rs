fn main() {
    std::process::exit(cyldelta::main_with(std::env::args_os()));
}
