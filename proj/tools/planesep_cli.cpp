// Placeholder main; the full CLI is assembled once the pipeline headers land.
int main() { return 0; }
