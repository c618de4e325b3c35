#include <iostream>

int main() {
    std::cout << "spectral-bohr: CLI under construction\n";
    return 0;
}
