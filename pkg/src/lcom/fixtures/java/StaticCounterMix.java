public class StaticCounterMix {
    private int value;
    private int scale;
    private static int instances;

    public void configure(int v, int s) {
        value = v;
        scale = s;
        instances = instances + 1;
    }

    public void rescale(int factor) {
        scale = scale * factor;
    }

    public void countInstance() {
        instances = instances + 1;
    }
}
