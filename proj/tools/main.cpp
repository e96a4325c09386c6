#include <iostream>
int main() { std::cout << "latpoly stub\n"; }
