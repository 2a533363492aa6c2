#include <iostream>

#include "kolmosym/kolmosym.hpp"

int main() {
    std::cout << "placeholder\n";
    return 0;
}
