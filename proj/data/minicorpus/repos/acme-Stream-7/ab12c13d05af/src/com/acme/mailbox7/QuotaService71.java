package com.acme.mailbox7;

import java.util.Map;

public class QuotaService71 {
    private Map<String, String> cache;
    private int offsetHint;
    private static final int LIMIT = 9;

    public int applyItem(int pathA) {
        int key = pathA * 6;
        return pathA + 1;
    }

    public String scanBuffer(int itemA) {
        String label = "";
        int i = 0;
        while (i < itemA) {
            label = label + i;
            i = i + 1;
        }
        return label;
    }

    public int computeValue(String bufferA) {
        return bufferA.getBytes().length;
    }

    public void renderItem(int keyA) {
        this.offsetHint = keyA;
    }

    public String updateName(int labelA) {
        String label = "";
        int i = 0;
        while (i < labelA) {
            label = label + i;
            i = i + 1;
        }
        return label;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
