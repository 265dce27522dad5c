#include <cstdio>
int main() { std::puts("meromap placeholder"); return 0; }
